/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <starhom/constructions.hh>

#include <algorithm>
#include <set>

using std::pair;
using std::set;
using std::vector;

namespace starhom
{
    namespace
    {
        auto need(bool ok, const std::string & what) -> void
        {
            if (! ok)
                throw Error(ErrorKind::invalid_parameter, what);
        }
    }

    auto complete_graph(int q) -> Graph
    {
        need(q >= 1, "complete graph needs q >= 1");
        vector<Edge> es;
        for (int i = 0 ; i < q ; ++i)
            for (int j = i + 1 ; j < q ; ++j)
                es.emplace_back(i, j);
        return Graph(q, es);
    }

    auto complete_bipartite(int a, int b) -> Graph
    {
        need(a >= 1 && b >= 1, "complete bipartite graph needs positive sides");
        vector<Edge> es;
        for (int i = 0 ; i < a ; ++i)
            for (int j = 0 ; j < b ; ++j)
                es.emplace_back(i, a + j);
        return Graph(a + b, es);
    }

    auto cycle_graph(int n) -> Graph
    {
        need(n >= 3, "cycle needs n >= 3");
        vector<Edge> es;
        for (int i = 0 ; i < n ; ++i)
            es.emplace_back(i, (i + 1) % n);
        return Graph(n, es);
    }

    auto path_graph(int n) -> Graph
    {
        need(n >= 1, "path needs n >= 1");
        vector<Edge> es;
        for (int i = 0 ; i + 1 < n ; ++i)
            es.emplace_back(i, i + 1);
        return Graph(n, es);
    }

    auto star_graph(int p) -> Graph
    {
        need(p >= 1, "star needs p >= 1");
        vector<Edge> es;
        for (int i = 1 ; i <= p ; ++i)
            es.emplace_back(0, i);
        return Graph(p + 1, es);
    }

    auto circular_ladder(int t) -> Graph
    {
        need(t >= 3, "circular ladder needs t >= 3");
        vector<Edge> es;
        for (int i = 0 ; i < t ; ++i) {
            es.emplace_back(i, t + i);
            es.emplace_back(i, (i + 1) % t);
            es.emplace_back(t + i, t + (i + 1) % t);
        }
        return Graph(2 * t, es);
    }

    auto cube_q3() -> Graph
    {
        vector<Edge> es;
        for (int v = 0 ; v < 8 ; ++v)
            for (int b = 0 ; b < 3 ; ++b)
                if (v < (v ^ (1 << b)))
                    es.emplace_back(v, v ^ (1 << b));
        return Graph(8, es);
    }

    auto friendship(int p, int removed_edges) -> Graph
    {
        need(p >= 1, "friendship graph needs p >= 1");
        need(removed_edges >= 0 && removed_edges <= p, "friendship graph: removed edges must lie in 0..p");
        need(removed_edges == 0 || p >= 2, "friendship graph: removing edges needs p >= 2");
        vector<Edge> es;
        for (int i = 0 ; i < p ; ++i) {
            es.emplace_back(0, 2 * i + 1);
            es.emplace_back(0, 2 * i + 2);
            if (i >= removed_edges)
                es.emplace_back(2 * i + 1, 2 * i + 2);
        }
        return Graph(2 * p + 1, es);
    }

    auto petersen() -> Graph
    {
        vector<Edge> es;
        for (int i = 0 ; i < 5 ; ++i) {
            es.emplace_back(i, (i + 1) % 5);
            es.emplace_back(i, 5 + i);
            es.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        return Graph(10, es);
    }

    auto octahedron() -> Graph
    {
        vector<Edge> es;
        for (int i = 0 ; i < 6 ; ++i)
            for (int j = i + 1 ; j < 6 ; ++j)
                if (j != i + 3)
                    es.emplace_back(i, j);
        return Graph(6, es);
    }

    auto diamond() -> Graph
    {
        return Graph(4, { {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3} });
    }

    auto paw() -> Graph
    {
        return Graph(4, { {0, 1}, {1, 2}, {2, 3}, {1, 3} });
    }

    auto antiprism(int m) -> Graph
    {
        need(m >= 3, "antiprism needs m >= 3");
        vector<Edge> es;
        for (int i = 0 ; i < m ; ++i) {
            es.emplace_back(i, (i + 1) % m);
            es.emplace_back(m + i, m + (i + 1) % m);
            es.emplace_back(i, m + i);
            es.emplace_back(i, m + (i + 1) % m);
        }
        return Graph(2 * m, es);
    }

    auto directed_cycle(int n) -> OrientedGraph
    {
        need(n >= 3, "directed cycle needs n >= 3");
        vector<Arc> as;
        for (int i = 0 ; i < n ; ++i)
            as.emplace_back(i, (i + 1) % n);
        return OrientedGraph(n, as);
    }

    auto bipartite_double(const Graph & g) -> BipartiteDouble
    {
        BipartiteDouble result;
        int n = g.size();
        for (Vertex v = 0 ; v < n ; ++v)
            result.labels.emplace_back(v, 0);
        for (Vertex v = 0 ; v < n ; ++v)
            result.labels.emplace_back(v, 1);
        vector<Edge> es;
        for (auto [u, v] : g.edges()) {
            es.emplace_back(u, n + v);
            es.emplace_back(v, n + u);
        }
        result.graph = Graph(2 * n, es);
        return result;
    }

    auto line_graph(const Graph & g) -> LineGraph
    {
        LineGraph result;
        result.labels = g.edges();
        auto & ls = result.labels;
        vector<vector<int>> incident(g.size());
        for (std::size_t i = 0 ; i < ls.size() ; ++i) {
            incident[ls[i].first].push_back(int(i));
            incident[ls[i].second].push_back(int(i));
        }
        vector<Edge> es;
        for (auto & inc : incident)
            for (std::size_t a = 0 ; a < inc.size() ; ++a)
                for (std::size_t b = a + 1 ; b < inc.size() ; ++b)
                    es.emplace_back(inc[a], inc[b]);
        result.graph = Graph(int(ls.size()), es);
        return result;
    }

    namespace
    {
        auto intersect(const vector<Vertex> & a, std::span<const Vertex> b) -> vector<Vertex>
        {
            vector<Vertex> r;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
            return r;
        }

        auto bron_kerbosch(const Graph & g, vector<Vertex> & r, vector<Vertex> p, vector<Vertex> x,
                vector<vector<Vertex>> & out) -> void
        {
            if (p.empty()) {
                if (x.empty()) {
                    auto c = r;
                    std::sort(c.begin(), c.end());
                    out.push_back(std::move(c));
                }
                return;
            }

            // pivot maximising |P ∩ N(u)|, lowest id on ties
            Vertex pivot = -1;
            std::size_t best = 0;
            for (auto & pool : { std::cref(p), std::cref(x) })
                for (auto u : pool.get()) {
                    auto c = intersect(p, g.neighbours(u)).size();
                    if (pivot == -1 || c > best || (c == best && u < pivot)) {
                        pivot = u;
                        best = c;
                    }
                }

            vector<Vertex> candidates;
            for (auto v : p)
                if (! g.has_edge(pivot, v))
                    candidates.push_back(v);

            for (auto v : candidates) {
                r.push_back(v);
                bron_kerbosch(g, r, intersect(p, g.neighbours(v)), intersect(x, g.neighbours(v)), out);
                r.pop_back();
                p.erase(std::find(p.begin(), p.end(), v));
                x.insert(std::upper_bound(x.begin(), x.end(), v), v);
            }
        }
    }

    auto maximal_cliques(const Graph & g) -> vector<vector<Vertex>>
    {
        vector<vector<Vertex>> out;
        vector<Vertex> r, p;
        for (Vertex v = 0 ; v < g.size() ; ++v)
            p.push_back(v);
        if (! p.empty())
            bron_kerbosch(g, r, p, {}, out);
        std::sort(out.begin(), out.end());
        return out;
    }

    auto clique_graph(const Graph & g) -> CliqueGraph
    {
        CliqueGraph result;
        result.labels = maximal_cliques(g);
        auto & ls = result.labels;
        vector<Edge> es;
        for (std::size_t a = 0 ; a < ls.size() ; ++a)
            for (std::size_t b = a + 1 ; b < ls.size() ; ++b)
                if (! intersect(ls[a], ls[b]).empty())
                    es.emplace_back(int(a), int(b));
        result.graph = Graph(int(ls.size()), es);
        return result;
    }

    auto oriented_line_graph(const Graph & g) -> OrientedLineGraph
    {
        OrientedLineGraph result;
        for (Vertex u = 0 ; u < g.size() ; ++u)
            for (auto v : g.neighbours(u))
                result.labels.emplace_back(u, v);

        // labels are sorted, so (v, w) can be found by offset
        vector<int> first(g.size() + 1, 0);
        for (Vertex u = 0 ; u < g.size() ; ++u)
            first[u + 1] = first[u] + g.degree(u);

        vector<Arc> as;
        for (std::size_t i = 0 ; i < result.labels.size() ; ++i) {
            auto [u, v] = result.labels[i];
            auto nv = g.neighbours(v);
            for (std::size_t j = 0 ; j < nv.size() ; ++j)
                if (nv[j] != u)
                    as.emplace_back(int(i), first[v] + int(j));
        }
        result.graph = OrientedGraph(int(result.labels.size()), as);
        return result;
    }

    auto lstar(const Graph & g) -> LStarGraph
    {
        auto ol = oriented_line_graph(g);
        return LStarGraph{ shadow(ol.graph), std::move(ol.labels) };
    }

    auto disjoint_union(const Graph & g, int copies) -> Graph
    {
        need(copies >= 1, "disjoint union needs at least one copy");
        vector<Edge> es;
        for (int c = 0 ; c < copies ; ++c)
            for (auto [u, v] : g.edges())
                es.emplace_back(c * g.size() + u, c * g.size() + v);
        return Graph(copies * g.size(), es);
    }

    auto disjoint_union(const OrientedGraph & g, int copies) -> OrientedGraph
    {
        need(copies >= 1, "disjoint union needs at least one copy");
        vector<Arc> as;
        for (int c = 0 ; c < copies ; ++c)
            for (auto [u, v] : g.arcs())
                as.emplace_back(c * g.size() + u, c * g.size() + v);
        return OrientedGraph(copies * g.size(), as);
    }

    auto random_gnp(int n, double p, Random & rng) -> Graph
    {
        std::bernoulli_distribution coin(p);
        vector<Edge> es;
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                if (coin(rng))
                    es.emplace_back(i, j);
        return Graph(n, es);
    }

    auto random_regular(int n, int d, Random & rng, bool connected) -> Graph
    {
        need(n > d && d >= 0 && (n * d) % 2 == 0, "no " + std::to_string(d) + "-regular graph on " + std::to_string(n) + " vertices");
        vector<Vertex> points;
        for (int v = 0 ; v < n ; ++v)
            for (int i = 0 ; i < d ; ++i)
                points.push_back(v);

        for (int attempt = 0 ; attempt < 1000000 ; ++attempt) {
            std::shuffle(points.begin(), points.end(), rng);
            set<Edge> seen;
            bool ok = true;
            for (std::size_t i = 0 ; ok && i < points.size() ; i += 2) {
                auto u = points[i], v = points[i + 1];
                if (u == v)
                    ok = false;
                else if (! seen.emplace(std::min(u, v), std::max(u, v)).second)
                    ok = false;
            }
            if (! ok)
                continue;
            Graph g(n, vector<Edge>(seen.begin(), seen.end()));
            if (connected && ! g.is_connected())
                continue;
            return g;
        }
        throw Error(ErrorKind::budget_exceeded, "pairing model kept rejecting");
    }

    auto random_orientation(const Graph & g, Random & rng) -> OrientedGraph
    {
        std::bernoulli_distribution coin(0.5);
        vector<bool> forward;
        for (std::size_t i = 0 ; i < g.edge_count() ; ++i)
            forward.push_back(coin(rng));
        return OrientedGraph(g, forward);
    }
}
