/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <starhom/structure.hh>
#include <starhom/budget.hh>

#include <algorithm>
#include <bit>
#include <climits>
#include <functional>
#include <numeric>

using std::optional;
using std::vector;

namespace starhom
{
    auto Guards::none() -> Guards
    {
        return Guards{ INT_MAX, INT_MAX, INT_MAX, INT_MAX, INT_MAX };
    }

    namespace
    {
        auto guard(int value, int limit, const char * what) -> void
        {
            if (value > limit)
                throw Error(ErrorKind::budget_exceeded, std::string(what) + ": size " + std::to_string(value)
                        + " exceeds the limit of " + std::to_string(limit));
        }

        // an independent set of size p among vs
        auto independent_subset(const Graph & g, std::span<const Vertex> vs, int p) -> optional<vector<Vertex>>
        {
            vector<Vertex> chosen;
            std::function<bool (std::size_t)> go = [&] (std::size_t i) -> bool {
                if (int(chosen.size()) == p)
                    return true;
                if (int(chosen.size() + (vs.size() - i)) < p)
                    return false;
                auto v = vs[i];
                if (std::none_of(chosen.begin(), chosen.end(), [&] (Vertex u) { return g.has_edge(u, v); })) {
                    chosen.push_back(v);
                    if (go(i + 1))
                        return true;
                    chosen.pop_back();
                }
                return go(i + 1);
            };
            if (go(0))
                return chosen;
            return std::nullopt;
        }

        auto common_neighbours(const Graph & g, Vertex u, Vertex v) -> vector<Vertex>
        {
            vector<Vertex> r;
            auto a = g.neighbours(u), b = g.neighbours(v);
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
            return r;
        }

        enum class Shape { star, diamond, k4, other };

        auto classify(const Graph & pattern) -> Shape
        {
            int n = pattern.size();
            auto m = pattern.edge_count();
            if (n == 4 && m == 6)
                return Shape::k4;
            if (n == 4 && m == 5)
                return Shape::diamond;
            if (n >= 2 && m == std::size_t(n - 1)) {
                for (Vertex v = 0 ; v < n ; ++v)
                    if (pattern.degree(v) == n - 1)
                        return Shape::star;
            }
            return Shape::other;
        }

        // pattern vertices in an order where each one touches earlier ones when possible
        auto pattern_order(const Graph & pattern) -> vector<Vertex>
        {
            int n = pattern.size();
            vector<Vertex> order;
            vector<char> placed(n, 0);
            while (int(order.size()) < n) {
                Vertex best = -1;
                int best_links = -1;
                for (Vertex v = 0 ; v < n ; ++v) {
                    if (placed[v])
                        continue;
                    int links = 0;
                    for (auto w : pattern.neighbours(v))
                        links += placed[w];
                    if (links > best_links || (links == best_links && pattern.degree(v) > pattern.degree(best))) {
                        best = v;
                        best_links = links;
                    }
                }
                placed[best] = 1;
                order.push_back(best);
            }
            return order;
        }

        auto embed(const Graph & g, const Graph & pattern, bool induced) -> optional<vector<Vertex>>
        {
            auto order = pattern_order(pattern);
            vector<Vertex> img(pattern.size(), -1);
            vector<char> used(g.size(), 0);

            std::function<bool (std::size_t)> go = [&] (std::size_t i) -> bool {
                check_deadline();
                if (i == order.size())
                    return true;
                auto x = order[i];
                for (Vertex c = 0 ; c < g.size() ; ++c) {
                    if (used[c] || g.degree(c) < pattern.degree(x))
                        continue;
                    bool ok = true;
                    for (std::size_t j = 0 ; ok && j < i ; ++j) {
                        auto y = order[j];
                        bool pe = pattern.has_edge(x, y), ge = g.has_edge(c, img[y]);
                        if (pe && ! ge)
                            ok = false;
                        if (induced && ge && ! pe)
                            ok = false;
                    }
                    if (! ok)
                        continue;
                    img[x] = c;
                    used[c] = 1;
                    if (go(i + 1))
                        return true;
                    used[c] = 0;
                    img[x] = -1;
                }
                return false;
            };
            if (go(0))
                return img;
            return std::nullopt;
        }
    }

    auto find_induced_star(const Graph & g, int p) -> optional<vector<Vertex>>
    {
        for (Vertex v = 0 ; v < g.size() ; ++v) {
            if (g.degree(v) < p)
                continue;
            if (auto leaves = independent_subset(g, g.neighbours(v), p)) {
                vector<Vertex> r{ v };
                r.insert(r.end(), leaves->begin(), leaves->end());
                return r;
            }
        }
        return std::nullopt;
    }

    auto find_induced_diamond(const Graph & g) -> optional<vector<Vertex>>
    {
        for (auto [x, y] : g.edges()) {
            auto c = common_neighbours(g, x, y);
            for (std::size_t i = 0 ; i < c.size() ; ++i)
                for (std::size_t j = i + 1 ; j < c.size() ; ++j)
                    if (! g.has_edge(c[i], c[j]))
                        return vector<Vertex>{ x, y, c[i], c[j] };
        }
        return std::nullopt;
    }

    auto find_k4(const Graph & g) -> optional<vector<Vertex>>
    {
        for (auto [x, y] : g.edges()) {
            auto c = common_neighbours(g, x, y);
            for (std::size_t i = 0 ; i < c.size() ; ++i)
                for (std::size_t j = i + 1 ; j < c.size() ; ++j)
                    if (g.has_edge(c[i], c[j]))
                        return vector<Vertex>{ x, y, c[i], c[j] };
        }
        return std::nullopt;
    }

    auto find_induced(const Graph & g, const Graph & pattern, const Guards & guards) -> optional<vector<Vertex>>
    {
        // fast-path witnesses are re-expressed as pattern vertex -> g vertex
        auto as_map = [&] (optional<vector<Vertex>> found) -> optional<vector<Vertex>> {
            if (! found)
                return std::nullopt;
            auto h = g.induced(*found);
            auto m = embed(h, pattern, true);
            if (! m)
                throw Error(ErrorKind::theorem_violation, "fast-path witness does not match the pattern");
            for (auto & x : *m)
                x = (*found)[x];
            return m;
        };

        switch (classify(pattern)) {
            case Shape::star:    return as_map(find_induced_star(g, pattern.size() - 1));
            case Shape::diamond: return as_map(find_induced_diamond(g));
            case Shape::k4:      return as_map(find_k4(g));
            case Shape::other:   break;
        }
        guard(pattern.size(), guards.induced_pattern, "induced pattern");
        return embed(g, pattern, true);
    }

    auto is_induced_free(const Graph & g, const Graph & pattern, const Guards & guards) -> bool
    {
        return ! find_induced(g, pattern, guards);
    }

    auto find_subgraph(const Graph & g, const Graph & pattern, const Guards & guards) -> optional<vector<Vertex>>
    {
        guard(pattern.size(), guards.subgraph_pattern, "subgraph pattern");
        return embed(g, pattern, false);
    }

    auto contains_subgraph(const Graph & g, const Graph & pattern, const Guards & guards) -> bool
    {
        return find_subgraph(g, pattern, guards).has_value();
    }

    auto is_locally_linear(const Graph & g) -> bool
    {
        for (auto [u, v] : g.edges())
            if (common_neighbours(g, u, v).size() != 1)
                return false;
        return true;
    }

    auto in_family_f(const Graph & g, int q, int r) -> bool
    {
        if (q < 1 || r < 1)
            throw Error(ErrorKind::invalid_parameter, "q and r must be positive");
        if (! g.is_connected() || g.regular_degree() != q * r)
            return false;
        for (Vertex v = 0 ; v < g.size() ; ++v) {
            auto nv = g.neighbours(v);
            auto h = g.induced(vector<Vertex>(nv.begin(), nv.end()));
            // a component on r vertices of degree r-1 is K_r
            if (h.regular_degree() != r - 1)
                return false;
            vector<char> seen(h.size(), 0);
            int components = 0;
            for (Vertex s = 0 ; s < h.size() ; ++s) {
                if (seen[s])
                    continue;
                ++components;
                int size = 0;
                vector<Vertex> stack{ s };
                seen[s] = 1;
                while (! stack.empty()) {
                    auto x = stack.back();
                    stack.pop_back();
                    ++size;
                    for (auto y : h.neighbours(x))
                        if (! seen[y]) {
                            seen[y] = 1;
                            stack.push_back(y);
                        }
                }
                if (size != r)
                    return false;
            }
            if (components != q)
                return false;
        }
        return true;
    }

    auto find_odd_hole(const Graph & g, const Guards & guards) -> optional<vector<Vertex>>
    {
        guard(g.size(), guards.odd_hole, "odd hole search");
        vector<Vertex> path;
        vector<char> on_path(g.size(), 0);
        optional<vector<Vertex>> found;

        // path[0] is the smallest vertex; interior vertices avoid its neighbourhood
        std::function<bool ()> extend = [&] () -> bool {
            check_deadline();
            auto s = path.front(), last = path.back();
            for (auto w : g.neighbours(last)) {
                if (w <= s || on_path[w])
                    continue;
                bool chord = false;
                for (std::size_t i = 1 ; i + 1 < path.size() && ! chord ; ++i)
                    chord = g.has_edge(w, path[i]);
                if (chord)
                    continue;
                if (path.size() >= 2 && g.has_edge(w, s)) {
                    if (path.size() + 1 >= 5 && (path.size() + 1) % 2 == 1) {
                        found = path;
                        found->push_back(w);
                        return true;
                    }
                    continue;
                }
                if (g.has_edge(w, s))
                    continue;
                path.push_back(w);
                on_path[w] = 1;
                if (extend())
                    return true;
                on_path[w] = 0;
                path.pop_back();
            }
            return false;
        };

        for (Vertex s = 0 ; s < g.size() ; ++s)
            for (auto v : g.neighbours(s)) {
                if (v <= s)
                    continue;
                path = { s, v };
                on_path.assign(g.size(), 0);
                on_path[s] = on_path[v] = 1;
                if (extend())
                    return found;
            }
        return std::nullopt;
    }

    auto is_odd_hole_free(const Graph & g, const Guards & guards) -> bool
    {
        return ! find_odd_hole(g, guards);
    }

    auto independence_number(const Graph & g, const Guards & guards) -> int
    {
        guard(g.size(), guards.independence, "independence number");
        guard(g.size(), 64, "independence number bitset");
        int best = 0;
        std::function<void (std::uint64_t, int)> go = [&] (std::uint64_t p, int size) {
            check_deadline();
            if (size + std::popcount(p) <= best)
                return;
            if (p == 0) {
                best = size;
                return;
            }
            Vertex v = -1;
            int vd = -1;
            for (auto rest = p ; rest ; rest &= rest - 1) {
                auto u = std::countr_zero(rest);
                auto d = std::popcount(g.bits(u) & p);
                if (d > vd) {
                    v = u;
                    vd = d;
                }
            }
            if (vd == 0) {
                best = std::max(best, size + std::popcount(p));
                return;
            }
            go(p & ~(std::uint64_t{1} << v) & ~g.bits(v), size + 1);
            go(p & ~(std::uint64_t{1} << v), size);
        };
        std::uint64_t all = g.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1;
        go(all, 0);
        return best;
    }

    auto find_hamiltonian_cycle(const Graph & g, const Guards & guards) -> optional<vector<Vertex>>
    {
        guard(g.size(), guards.hamiltonian, "hamiltonian cycle");
        int n = g.size();
        if (n < 3)
            return std::nullopt;
        vector<Vertex> path{ 0 };
        vector<char> visited(n, 0);
        visited[0] = 1;

        std::function<bool ()> go = [&] () -> bool {
            check_deadline();
            auto last = path.back();
            if (int(path.size()) == n)
                return g.has_edge(last, 0);
            for (auto w : g.neighbours(last)) {
                if (visited[w])
                    continue;
                // every other unvisited vertex still needs two usable neighbours
                visited[w] = 1;
                path.push_back(w);
                bool dead = false;
                for (Vertex u = 0 ; u < n && ! dead ; ++u) {
                    if (visited[u])
                        continue;
                    int free = 0;
                    for (auto x : g.neighbours(u))
                        if (! visited[x] || x == w || x == 0)
                            ++free;
                    dead = free < 2;
                }
                if (! dead && go())
                    return true;
                path.pop_back();
                visited[w] = 0;
            }
            return false;
        };
        if (go())
            return path;
        return std::nullopt;
    }
}
