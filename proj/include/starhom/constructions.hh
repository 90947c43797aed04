/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STARHOM_GUARD_CONSTRUCTIONS_HH
#define STARHOM_GUARD_CONSTRUCTIONS_HH 1

#include <starhom/graph.hh>

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

namespace starhom
{
    /**
     * A graph (or orientation) whose vertex i stands for labels[i].
     */
    template <typename G_, typename Label_>
    struct Labelled
    {
        G_ graph;
        std::vector<Label_> labels;

        auto index_of(const Label_ & l) const -> std::optional<Vertex>
        {
            auto it = std::find(labels.begin(), labels.end(), l);
            if (it == labels.end())
                return std::nullopt;
            return Vertex(it - labels.begin());
        }
    };

    using PairLabel = std::pair<Vertex, Vertex>;
    using LineGraph = Labelled<Graph, Edge>;
    using OrientedLineGraph = Labelled<OrientedGraph, PairLabel>;
    using LStarGraph = Labelled<Graph, PairLabel>;
    using CliqueGraph = Labelled<Graph, std::vector<Vertex>>;
    using BipartiteDouble = Labelled<Graph, std::pair<Vertex, int>>;

    auto complete_graph(int q) -> Graph;
    auto complete_bipartite(int a, int b) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;

    // K_{1,p}, centre 0
    auto star_graph(int p) -> Graph;

    // u_i = i, v_i = t + i
    auto circular_ladder(int t) -> Graph;
    auto cube_q3() -> Graph;

    // universal vertex 0, triangles {0, 2i+1, 2i+2}; the first r outer edges go
    auto friendship(int p, int removed_edges = 0) -> Graph;

    auto petersen() -> Graph;
    auto octahedron() -> Graph;

    // x = 0, y = 1, a = 2, b = 3, the missing edge is ab
    auto diamond() -> Graph;

    // triangle 1 2 3 with pendant 0 on 1
    auto paw() -> Graph;

    // 4-regular on 2m vertices: u_i u_{i+1}, v_i v_{i+1}, u_i v_i, u_i v_{i+1}
    auto antiprism(int m) -> Graph;

    auto directed_cycle(int n) -> OrientedGraph;

    auto bipartite_double(const Graph &) -> BipartiteDouble;
    auto line_graph(const Graph &) -> LineGraph;

    // sorted cliques, each sorted
    auto maximal_cliques(const Graph &) -> std::vector<std::vector<Vertex>>;
    auto clique_graph(const Graph &) -> CliqueGraph;

    // pair labels in lexicographic order
    auto oriented_line_graph(const Graph &) -> OrientedLineGraph;
    auto lstar(const Graph &) -> LStarGraph;

    // copy c of v is c * n + v
    auto disjoint_union(const Graph &, int copies) -> Graph;
    auto disjoint_union(const OrientedGraph &, int copies) -> OrientedGraph;

    using Random = std::mt19937_64;

    auto random_gnp(int n, double p, Random &) -> Graph;

    // pairing model, rejecting loops and repeated pairs
    auto random_regular(int n, int d, Random &, bool connected = true) -> Graph;
    auto random_orientation(const Graph &, Random &) -> OrientedGraph;
}

#endif
