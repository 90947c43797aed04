/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <starhom/graph.hh>

#include <algorithm>
#include <queue>

using std::optional;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace starhom
{
    auto to_string(ErrorKind k) -> string_view
    {
        switch (k) {
            case ErrorKind::invalid_parameter:      return "invalid-parameter";
            case ErrorKind::invalid_input:          return "invalid-input";
            case ErrorKind::malformed_colouring:    return "malformed-colouring";
            case ErrorKind::malformed_map:          return "malformed-map";
            case ErrorKind::precondition_violation: return "precondition-violation";
            case ErrorKind::budget_exceeded:        return "budget-exceeded";
            case ErrorKind::invalid_switch:         return "invalid-switch";
            case ErrorKind::theorem_violation:      return "theorem-violation";
            case ErrorKind::parse_error:            return "parse-error";
        }
        return "unknown";
    }

    Error::Error(ErrorKind kind, const string & message) :
        std::runtime_error(string(to_string(kind)) + ": " + message),
        _kind(kind)
    {
    }

    Graph::Graph(int n) :
        _n(n),
        _adj(n)
    {
        if (n < 0)
            throw Error(ErrorKind::invalid_input, "negative vertex count");
        if (n <= 64)
            _bits.assign(n, 0);
    }

    Graph::Graph(int n, std::initializer_list<Edge> edges) :
        Graph(n, span<const Edge>(edges.begin(), edges.size()))
    {
    }

    Graph::Graph(int n, span<const Edge> edges) :
        Graph(n)
    {
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw Error(ErrorKind::invalid_input, "edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
            if (u == v)
                throw Error(ErrorKind::invalid_input, "loop at " + std::to_string(u));
            _adj[u].push_back(v);
            _adj[v].push_back(u);
        }

        for (auto & a : _adj) {
            std::sort(a.begin(), a.end());
            if (std::adjacent_find(a.begin(), a.end()) != a.end())
                throw Error(ErrorKind::invalid_input, "repeated edge");
        }

        _m = edges.size();
        if (! _bits.empty())
            for (Vertex v = 0 ; v < n ; ++v)
                for (auto w : _adj[v])
                    _bits[v] |= std::uint64_t{1} << w;
    }

    auto Graph::has_edge(Vertex u, Vertex v) const -> bool
    {
        if (! _bits.empty())
            return (_bits[u] >> v) & 1;
        auto & a = _adj[u].size() < _adj[v].size() ? _adj[u] : _adj[v];
        return std::binary_search(a.begin(), a.end(), &a == &_adj[u] ? v : u);
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(_m);
        for (Vertex u = 0 ; u < _n ; ++u)
            for (auto v : _adj[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::max_degree() const -> int
    {
        int d = 0;
        for (auto & a : _adj)
            d = std::max(d, int(a.size()));
        return d;
    }

    auto Graph::regular_degree() const -> optional<int>
    {
        if (_n == 0)
            return 0;
        for (auto & a : _adj)
            if (a.size() != _adj[0].size())
                return std::nullopt;
        return int(_adj[0].size());
    }

    auto Graph::is_connected() const -> bool
    {
        if (_n == 0)
            return true;
        vector<char> seen(_n, 0);
        vector<Vertex> stack{0};
        seen[0] = 1;
        int count = 1;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : _adj[v])
                if (! seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == _n;
    }

    auto Graph::is_bipartite() const -> bool
    {
        vector<int> side(_n, -1);
        for (Vertex s = 0 ; s < _n ; ++s) {
            if (side[s] != -1)
                continue;
            side[s] = 0;
            std::queue<Vertex> q;
            q.push(s);
            while (! q.empty()) {
                auto v = q.front();
                q.pop();
                for (auto w : _adj[v]) {
                    if (side[w] == -1) {
                        side[w] = 1 - side[v];
                        q.push(w);
                    }
                    else if (side[w] == side[v])
                        return false;
                }
            }
        }
        return true;
    }

    auto Graph::induced(span<const Vertex> vertices) const -> Graph
    {
        vector<int> index(_n, -1);
        for (std::size_t i = 0 ; i < vertices.size() ; ++i)
            index[vertices[i]] = int(i);
        vector<Edge> es;
        for (std::size_t i = 0 ; i < vertices.size() ; ++i)
            for (auto w : _adj[vertices[i]])
                if (index[w] > int(i))
                    es.emplace_back(int(i), index[w]);
        return Graph(int(vertices.size()), es);
    }

    auto Graph::without_vertex(Vertex v) const -> Graph
    {
        vector<Vertex> keep;
        for (Vertex u = 0 ; u < _n ; ++u)
            if (u != v)
                keep.push_back(u);
        return induced(keep);
    }

    auto Graph::operator== (const Graph & other) const -> bool
    {
        return _n == other._n && _adj == other._adj;
    }

    OrientedGraph::OrientedGraph(int n, std::initializer_list<Arc> arcs) :
        OrientedGraph(n, span<const Arc>(arcs.begin(), arcs.size()))
    {
    }

    OrientedGraph::OrientedGraph(int n, span<const Arc> arcs) :
        _underlying(n, arcs),
        _out(n),
        _in(n)
    {
        // the Graph constructor already rejects loops and both (u,v),(v,u)
        for (auto [u, v] : arcs) {
            _out[u].push_back(v);
            _in[v].push_back(u);
        }
        for (auto & a : _out)
            std::sort(a.begin(), a.end());
        for (auto & a : _in)
            std::sort(a.begin(), a.end());
    }

    OrientedGraph::OrientedGraph(const Graph & underlying, const vector<bool> & forward) :
        _underlying(underlying),
        _out(underlying.size()),
        _in(underlying.size())
    {
        auto es = underlying.edges();
        if (es.size() != forward.size())
            throw Error(ErrorKind::invalid_input, "direction flags do not match edge count");
        for (std::size_t i = 0 ; i < es.size() ; ++i) {
            auto [u, v] = es[i];
            if (! forward[i])
                std::swap(u, v);
            _out[u].push_back(v);
            _in[v].push_back(u);
        }
        for (auto & a : _out)
            std::sort(a.begin(), a.end());
        for (auto & a : _in)
            std::sort(a.begin(), a.end());
    }

    auto OrientedGraph::has_arc(Vertex u, Vertex v) const -> bool
    {
        return std::binary_search(_out[u].begin(), _out[u].end(), v);
    }

    auto OrientedGraph::arcs() const -> vector<Arc>
    {
        vector<Arc> result;
        for (Vertex u = 0 ; u < size() ; ++u)
            for (auto v : _out[u])
                result.emplace_back(u, v);
        return result;
    }

    auto OrientedGraph::forward_flags() const -> vector<bool>
    {
        vector<bool> result;
        for (auto [u, v] : _underlying.edges())
            result.push_back(has_arc(u, v));
        return result;
    }

    auto OrientedGraph::induced(span<const Vertex> vertices) const -> OrientedGraph
    {
        vector<int> index(size(), -1);
        for (std::size_t i = 0 ; i < vertices.size() ; ++i)
            index[vertices[i]] = int(i);
        vector<Arc> as;
        for (std::size_t i = 0 ; i < vertices.size() ; ++i)
            for (auto w : _out[vertices[i]])
                if (index[w] != -1)
                    as.emplace_back(int(i), index[w]);
        return OrientedGraph(int(vertices.size()), as);
    }

    auto OrientedGraph::reversed() const -> OrientedGraph
    {
        vector<Arc> as;
        for (auto [u, v] : arcs())
            as.emplace_back(v, u);
        return OrientedGraph(size(), as);
    }

    auto OrientedGraph::operator== (const OrientedGraph & other) const -> bool
    {
        return _underlying == other._underlying && _out == other._out;
    }

    auto shadow(const OrientedGraph & og) -> Graph
    {
        return og.underlying();
    }
}
