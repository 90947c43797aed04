/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <starhom/orientation.hh>
#include <starhom/budget.hh>

#include <algorithm>
#include <numeric>
#include <set>

using std::optional;
using std::set;
using std::vector;

namespace starhom
{
    ColouredOrientation::ColouredOrientation(OrientedGraph o, Colouring f) :
        orientation(std::move(o)),
        colouring(std::move(f))
    {
        if (colouring.size() != orientation.size())
            throw Error(ErrorKind::malformed_colouring, "colouring and orientation differ in size");
    }

    auto induced_in_orientation(const Graph & g, const Colouring & f) -> OrientedGraph
    {
        if (! is_star_colouring(g, f))
            throw Error(ErrorKind::precondition_violation, "in-orientation needs a star colouring");

        // u -> v is forced when v has a second neighbour coloured f(u)
        vector<vector<int>> count(g.size(), vector<int>(f.k(), 0));
        for (Vertex v = 0 ; v < g.size() ; ++v)
            for (auto w : g.neighbours(v))
                ++count[v][f[w]];

        vector<bool> forward;
        for (auto [u, v] : g.edges()) {
            bool into_v = count[v][f[u]] >= 2, into_u = count[u][f[v]] >= 2;
            if (into_v && into_u)
                throw Error(ErrorKind::theorem_violation, "bicoloured path forces both directions");
            forward.push_back(! into_u);
        }
        return OrientedGraph(g, forward);
    }

    auto is_coloured_in_orientation(const ColouredOrientation & co) -> bool
    {
        auto & og = co.orientation;
        auto & f = co.colouring;
        if (! is_proper(og.underlying(), f))
            return false;
        vector<int> out_mark(f.k(), -1);
        for (Vertex v = 0 ; v < og.size() ; ++v) {
            for (auto w : og.out_neighbours(v)) {
                if (out_mark[f[w]] == v)
                    return false;
                out_mark[f[w]] = v;
            }
            for (auto w : og.in_neighbours(v))
                if (out_mark[f[w]] == v)
                    return false;
        }
        return true;
    }

    auto in_colour_map(const OrientedGraph & og, const Colouring & f) -> optional<vector<optional<int>>>
    {
        vector<optional<int>> h(og.size());
        for (Vertex v = 0 ; v < og.size() ; ++v)
            for (auto u : og.in_neighbours(v)) {
                if (h[v] && *h[v] != f[u])
                    return std::nullopt;
                h[v] = f[u];
            }
        return h;
    }

    auto is_mini(const ColouredOrientation & co) -> bool
    {
        return is_coloured_in_orientation(co) && in_colour_map(co.orientation, co.colouring);
    }

    namespace
    {
        struct UnionFind
        {
            vector<int> parent;

            explicit UnionFind(int n) : parent(n)
            {
                std::iota(parent.begin(), parent.end(), 0);
            }

            auto find(int x) -> int
            {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            }

            auto unite(int a, int b) -> void
            {
                a = find(a);
                b = find(b);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
        };
    }

    auto shared_out_classes(const OrientedGraph & og) -> vector<int>
    {
        UnionFind uf(og.size());
        for (Vertex v = 0 ; v < og.size() ; ++v) {
            auto in = og.in_neighbours(v);
            for (std::size_t i = 1 ; i < in.size() ; ++i)
                uf.unite(in[0], in[i]);
        }

        vector<int> id(og.size(), -1), result(og.size());
        int next = 0;
        for (Vertex v = 0 ; v < og.size() ; ++v) {
            auto r = uf.find(v);
            if (id[r] == -1)
                id[r] = next++;
            result[v] = id[r];
        }
        return result;
    }

    auto recognize_mini(const OrientedGraph & og) -> optional<MiniCertificate>
    {
        auto classes = shared_out_classes(og);
        int k = classes.empty() ? 0 : 1 + *std::max_element(classes.begin(), classes.end());
        Colouring f(k, classes);
        if (! is_mini(ColouredOrientation{ og, f }))
            return std::nullopt;
        return MiniCertificate{ f, *in_colour_map(og, f) };
    }

    auto mini_colouring_with(const OrientedGraph & og, int k) -> optional<Colouring>
    {
        auto classes = shared_out_classes(og);
        int c = classes.empty() ? 0 : 1 + *std::max_element(classes.begin(), classes.end());

        set<std::pair<int, int>> conflicts;
        bool impossible = false;
        auto clash = [&] (Vertex a, Vertex b) {
            int x = classes[a], y = classes[b];
            if (x == y)
                impossible = true;
            else
                conflicts.emplace(std::min(x, y), std::max(x, y));
        };

        for (Vertex v = 0 ; v < og.size() ; ++v) {
            auto out = og.out_neighbours(v);
            auto in = og.in_neighbours(v);
            for (auto w : out)
                clash(v, w);
            for (std::size_t i = 0 ; i < out.size() ; ++i) {
                for (std::size_t j = i + 1 ; j < out.size() ; ++j)
                    clash(out[i], out[j]);
                if (! in.empty())
                    clash(out[i], in[0]);
            }
        }
        if (impossible)
            return std::nullopt;

        vector<vector<int>> adj(c);
        for (auto [x, y] : conflicts) {
            adj[x].push_back(y);
            adj[y].push_back(x);
        }

        vector<int> order(c);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&] (int a, int b) { return adj[a].size() > adj[b].size(); });

        vector<int> colour(c, -1);
        std::function<bool (int, int)> go = [&] (int i, int used) -> bool {
            check_deadline();
            if (i == c)
                return true;
            auto x = order[i];
            for (int col = 0 ; col < std::min(k, used + 1) ; ++col) {
                bool ok = true;
                for (auto y : adj[x])
                    if (colour[y] == col)
                        ok = false;
                if (! ok)
                    continue;
                colour[x] = col;
                if (go(i + 1, std::max(used, col + 1)))
                    return true;
                colour[x] = -1;
            }
            return false;
        };
        if (! go(0, 0))
            return std::nullopt;

        vector<int> f(og.size());
        for (Vertex v = 0 ; v < og.size() ; ++v)
            f[v] = colour[classes[v]];
        Colouring result(k, f);
        if (! is_mini(ColouredOrientation{ og, result }))
            throw Error(ErrorKind::theorem_violation, "class colouring is not MINI");
        return result;
    }

    auto mini_local_filter(const OrientedGraph & og) -> bool
    {
        auto & g = og.underlying();
        for (Vertex a = 0 ; a < g.size() ; ++a) {
            auto na = g.neighbours(a);
            for (std::size_t i = 0 ; i < na.size() ; ++i)
                for (std::size_t j = i + 1 ; j < na.size() ; ++j) {
                    auto b = na[i], d = na[j];

                    // triangles, counted from their smallest vertex
                    if (a < b && g.has_edge(b, d)) {
                        bool cycle = (og.has_arc(a, b) && og.has_arc(b, d) && og.has_arc(d, a))
                            || (og.has_arc(a, d) && og.has_arc(d, b) && og.has_arc(b, a));
                        if (! cycle)
                            return false;
                    }

                    // 4-cycles a b c d with a smallest; opposite sides point the same way round
                    if (b < a || d < a)
                        continue;
                    for (auto c : g.neighbours(b)) {
                        if (c <= a || c == d || ! g.has_edge(c, d))
                            continue;
                        if (og.has_arc(a, b) != og.has_arc(c, d))
                            return false;
                        if (og.has_arc(b, c) != og.has_arc(d, a))
                            return false;
                    }
                }
        }
        return true;
    }

    auto is_eulerian(const OrientedGraph & og) -> bool
    {
        for (Vertex v = 0 ; v < og.size() ; ++v)
            if (og.in_degree(v) != og.out_degree(v))
                return false;
        return true;
    }

    auto is_strongly_connected(const OrientedGraph & og) -> bool
    {
        if (og.size() == 0)
            return true;
        for (bool forwards : { true, false }) {
            vector<char> seen(og.size(), 0);
            vector<Vertex> stack{ 0 };
            seen[0] = 1;
            int count = 1;
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                for (auto w : forwards ? og.out_neighbours(v) : og.in_neighbours(v))
                    if (! seen[w]) {
                        seen[w] = 1;
                        ++count;
                        stack.push_back(w);
                    }
            }
            if (count != og.size())
                return false;
        }
        return true;
    }

    OrientationEnumerator::OrientationEnumerator(const Graph & g, std::size_t edge_limit) :
        _g(g)
    {
        if (g.edge_count() > edge_limit || g.edge_count() >= 63)
            throw Error(ErrorKind::budget_exceeded, "enumerating orientations of " + std::to_string(g.edge_count())
                    + " edges exceeds the limit of " + std::to_string(edge_limit));
        _total = std::uint64_t{1} << g.edge_count();
        _first = 0;
        _last = _total;
        _step = 0;
        _forward.assign(g.edge_count(), false);
    }

    auto OrientationEnumerator::restrict_to(std::uint64_t first, std::uint64_t last) -> void
    {
        _first = std::min(first, _total);
        _last = std::min(last, _total);
        _step = _first;
    }

    auto OrientationEnumerator::next() -> optional<OrientedGraph>
    {
        if (_step >= _last)
            return std::nullopt;
        auto gray = _step ^ (_step >> 1);
        for (std::size_t i = 0 ; i < _forward.size() ; ++i)
            _forward[i] = (gray >> i) & 1;
        ++_step;
        return OrientedGraph(_g, _forward);
    }

    namespace
    {
        struct OrientationSearch
        {
            const Graph & g;
            int k;
            vector<std::pair<Vertex, Vertex>> edges;
            vector<bool> forward;
            vector<vector<Vertex>> in;
            vector<int> out_degree;
            optional<ColouredOrientation> found;

            auto out_limit(Vertex v) const -> int
            {
                return in[v].empty() ? k - 1 : k - 2;
            }

            // direct u -> v, returning false if a degree bound breaks
            auto place(Vertex u, Vertex v) -> bool
            {
                in[v].push_back(u);
                ++out_degree[u];
                return out_degree[u] <= out_limit(u) && out_degree[v] <= out_limit(v);
            }

            auto unplace(Vertex u, Vertex v) -> void
            {
                in[v].pop_back();
                --out_degree[u];
            }

            auto run(std::size_t i) -> bool
            {
                check_deadline();
                if (i == edges.size()) {
                    OrientedGraph og(g, forward);
                    if (auto f = mini_colouring_with(og, k)) {
                        found.emplace(og, *f);
                        return true;
                    }
                    return false;
                }

                auto [a, b] = edges[i];
                for (bool fw : { true, false }) {
                    auto u = fw ? a : b, v = fw ? b : a;
                    // in-neighbours share a colour, so they cannot be adjacent
                    bool ok = true;
                    for (auto w : in[v])
                        if (g.has_edge(w, u))
                            ok = false;
                    if (! ok)
                        continue;
                    ok = place(u, v);
                    forward[i] = fw;
                    if (ok && run(i + 1))
                        return true;
                    unplace(u, v);
                }
                return false;
            }
        };
    }

    auto find_mini_orientation(const Graph & g, int k) -> optional<ColouredOrientation>
    {
        if (k < 1)
            throw Error(ErrorKind::invalid_parameter, "k must be at least 1");
        OrientationSearch s{ g, k, g.edges(), vector<bool>(g.edge_count()), vector<vector<Vertex>>(g.size()),
            vector<int>(g.size(), 0), std::nullopt };
        if (s.run(0))
            return s.found;
        return std::nullopt;
    }
}
