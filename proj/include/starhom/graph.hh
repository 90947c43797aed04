/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STARHOM_GUARD_GRAPH_HH
#define STARHOM_GUARD_GRAPH_HH 1

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace starhom
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;
    using Arc = std::pair<Vertex, Vertex>;

    enum class ErrorKind
    {
        invalid_parameter,
        invalid_input,
        malformed_colouring,
        malformed_map,
        precondition_violation,
        budget_exceeded,
        invalid_switch,
        theorem_violation,
        parse_error
    };

    auto to_string(ErrorKind) -> std::string_view;

    class Error : public std::runtime_error
    {
        private:
            ErrorKind _kind;

        public:
            Error(ErrorKind kind, const std::string & message);

            auto kind() const -> ErrorKind { return _kind; }
    };

    /**
     * Simple undirected graph on 0..n-1. Immutable once built.
     */
    class Graph
    {
        private:
            int _n = 0;
            std::size_t _m = 0;
            std::vector<std::vector<Vertex>> _adj;
            std::vector<std::uint64_t> _bits;

        public:
            Graph() = default;
            explicit Graph(int n);

            // duplicates or loops are rejected with invalid_input
            Graph(int n, std::span<const Edge> edges);
            Graph(int n, std::initializer_list<Edge> edges);

            auto size() const -> int { return _n; }
            auto edge_count() const -> std::size_t { return _m; }
            auto neighbours(Vertex v) const -> std::span<const Vertex> { return _adj[v]; }
            auto degree(Vertex v) const -> int { return int(_adj[v].size()); }
            auto has_edge(Vertex u, Vertex v) const -> bool;

            // 64-bit neighbourhood mask, only meaningful when size() <= 64
            auto has_bitsets() const -> bool { return ! _bits.empty(); }
            auto bits(Vertex v) const -> std::uint64_t { return _bits[v]; }

            // edges (u, v) with u < v, sorted
            auto edges() const -> std::vector<Edge>;

            auto max_degree() const -> int;
            auto regular_degree() const -> std::optional<int>;
            auto is_connected() const -> bool;
            auto is_bipartite() const -> bool;

            // vertex i of the result is vertices[i]
            auto induced(std::span<const Vertex> vertices) const -> Graph;
            auto without_vertex(Vertex v) const -> Graph;

            auto operator== (const Graph &) const -> bool;
    };

    class OrientedGraph
    {
        private:
            Graph _underlying;
            std::vector<std::vector<Vertex>> _out, _in;

        public:
            OrientedGraph() = default;

            // rejects loops, repeats and opposite pairs
            OrientedGraph(int n, std::span<const Arc> arcs);
            OrientedGraph(int n, std::initializer_list<Arc> arcs);

            // forward[i] orients underlying.edges()[i] = (u, v) as u -> v, else v -> u
            OrientedGraph(const Graph & underlying, const std::vector<bool> & forward);

            auto size() const -> int { return _underlying.size(); }
            auto arc_count() const -> std::size_t { return _underlying.edge_count(); }
            auto underlying() const -> const Graph & { return _underlying; }
            auto out_neighbours(Vertex v) const -> std::span<const Vertex> { return _out[v]; }
            auto in_neighbours(Vertex v) const -> std::span<const Vertex> { return _in[v]; }
            auto out_degree(Vertex v) const -> int { return int(_out[v].size()); }
            auto in_degree(Vertex v) const -> int { return int(_in[v].size()); }
            auto has_arc(Vertex u, Vertex v) const -> bool;

            auto arcs() const -> std::vector<Arc>;

            // flags in the order of underlying().edges()
            auto forward_flags() const -> std::vector<bool>;

            auto induced(std::span<const Vertex> vertices) const -> OrientedGraph;
            auto reversed() const -> OrientedGraph;

            auto operator== (const OrientedGraph &) const -> bool;
    };

    auto shadow(const OrientedGraph &) -> Graph;
}

#endif
