/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <starhom/colouring.hh>
#include <starhom/budget.hh>

#include <algorithm>
#include <numeric>

using std::optional;
using std::vector;

namespace starhom
{
    Colouring::Colouring(int k, vector<int> assignment) :
        _k(k),
        _colour(std::move(assignment))
    {
        if (k < 0)
            throw Error(ErrorKind::malformed_colouring, "negative colour count");
        for (std::size_t v = 0 ; v < _colour.size() ; ++v)
            if (_colour[v] < 0 || _colour[v] >= k)
                throw Error(ErrorKind::malformed_colouring, "vertex " + std::to_string(v) + " has colour "
                        + std::to_string(_colour[v]) + " outside 0.." + std::to_string(k - 1));
    }

    auto Colouring::used_colours() const -> int
    {
        vector<char> seen(_k, 0);
        for (auto c : _colour)
            seen[c] = 1;
        return int(std::count(seen.begin(), seen.end(), 1));
    }

    namespace
    {
        auto check_size(const Graph & g, const Colouring & f) -> void
        {
            if (f.size() != g.size())
                throw Error(ErrorKind::malformed_colouring, "colouring covers " + std::to_string(f.size())
                        + " vertices, graph has " + std::to_string(g.size()));
        }
    }

    auto is_proper(const Graph & g, const Colouring & f) -> bool
    {
        check_size(g, f);
        for (auto [u, v] : g.edges())
            if (f[u] == f[v])
                return false;
        return true;
    }

    auto bicoloured_components(const Graph & g, const Colouring & f) -> vector<BicolouredComponent>
    {
        if (! is_proper(g, f))
            throw Error(ErrorKind::precondition_violation, "bicoloured components need a proper colouring");

        vector<vector<Vertex>> by_colour(f.k());
        for (Vertex v = 0 ; v < g.size() ; ++v)
            by_colour[f[v]].push_back(v);

        vector<BicolouredComponent> result;
        vector<int> seen(g.size(), -1);
        int stamp = 0;
        for (int i = 0 ; i < f.k() ; ++i)
            for (int j = i + 1 ; j < f.k() ; ++j) {
                if (by_colour[i].empty() && by_colour[j].empty())
                    continue;
                ++stamp;
                for (int side : { i, j })
                    for (auto s : by_colour[side]) {
                        if (seen[s] == stamp)
                            continue;
                        BicolouredComponent c;
                        c.colours = { i, j };
                        seen[s] = stamp;
                        vector<Vertex> stack{ s };
                        while (! stack.empty()) {
                            auto v = stack.back();
                            stack.pop_back();
                            c.vertices.push_back(v);
                            for (auto w : g.neighbours(v))
                                if ((f[w] == i || f[w] == j) && seen[w] != stamp) {
                                    seen[w] = stamp;
                                    stack.push_back(w);
                                }
                        }
                        std::sort(c.vertices.begin(), c.vertices.end());

                        int size = int(c.vertices.size());
                        std::size_t twice_edges = 0;
                        Vertex hub = -1;
                        for (auto v : c.vertices) {
                            int d = 0;
                            for (auto w : g.neighbours(v))
                                if (f[w] == i || f[w] == j)
                                    ++d;
                            twice_edges += d;
                            if (d == size - 1 && hub == -1)
                                hub = v;
                        }

                        if (size == 1)
                            c.shape = ComponentShape::k1;
                        else if (twice_edges == 2 * std::size_t(size - 1) && hub != -1) {
                            c.shape = ComponentShape::star;
                            c.centre = hub;
                            c.leaves = size - 1;
                        }
                        else
                            c.shape = ComponentShape::non_star;
                        result.push_back(std::move(c));
                    }
            }
        return result;
    }

    auto is_star_colouring(const Graph & g, const Colouring & f) -> bool
    {
        if (! is_proper(g, f))
            return false;
        for (auto & c : bicoloured_components(g, f))
            if (c.shape == ComponentShape::non_star)
                return false;
        return true;
    }

    auto is_distance_two(const Graph & g, const Colouring & f) -> bool
    {
        if (! is_proper(g, f))
            return false;
        vector<int> seen(f.k(), -1);
        for (Vertex v = 0 ; v < g.size() ; ++v)
            for (auto w : g.neighbours(v)) {
                if (seen[f[w]] == v)
                    return false;
                seen[f[w]] = v;
            }
        return true;
    }

    auto all_components_are_k1p(const Graph & g, const Colouring & f, int p) -> bool
    {
        if (! is_proper(g, f))
            return false;
        for (auto & c : bicoloured_components(g, f))
            if (c.shape != ComponentShape::star || c.leaves != p)
                return false;
        return true;
    }

    namespace
    {
        enum class Mode { star, distance_two, k1p };

        struct Search
        {
            const Graph & g;
            int k;
            Mode mode;
            int p = 0;

            vector<Vertex> order;
            vector<int> colour;
            vector<vector<int>> count;
            vector<int> uncoloured_neighbours;

            Search(const Graph & gg, int kk, Mode m, int pp = 0) :
                g(gg), k(kk), mode(m), p(pp),
                colour(gg.size(), -1),
                count(gg.size(), vector<int>(kk, 0)),
                uncoloured_neighbours(gg.size())
            {
                order.resize(g.size());
                std::iota(order.begin(), order.end(), 0);
                std::stable_sort(order.begin(), order.end(), [&] (Vertex a, Vertex b) {
                        return g.degree(a) > g.degree(b);
                        });
                for (Vertex v = 0 ; v < g.size() ; ++v)
                    uncoloured_neighbours[v] = g.degree(v);
            }

            auto star_allowed(Vertex v, int c) const -> bool
            {
                if (count[v][c] != 0)
                    return false;

                // v as the end of v - x - y - z
                for (auto x : g.neighbours(v)) {
                    if (colour[x] == -1)
                        continue;
                    int d = colour[x];
                    for (auto y : g.neighbours(x))
                        if (y != v && colour[y] == c && count[y][d] >= 2)
                            return false;
                }

                // v in the middle of x - v - y - z
                for (auto y : g.neighbours(v)) {
                    if (colour[y] == -1)
                        continue;
                    if (count[v][colour[y]] >= 2 && count[y][c] >= 1)
                        return false;
                }
                return true;
            }

            auto distance_two_allowed(Vertex v, int c) const -> bool
            {
                if (count[v][c] != 0)
                    return false;
                for (auto x : g.neighbours(v))
                    if (count[x][c] != 0)
                        return false;
                return true;
            }

            // once a coloured vertex has all its neighbours coloured, each
            // other colour must appear once or p times around it
            auto settled_ok(Vertex u) const -> bool
            {
                if (colour[u] == -1 || uncoloured_neighbours[u] != 0)
                    return true;
                for (int b = 0 ; b < k ; ++b)
                    if (b != colour[u] && count[u][b] != 1 && count[u][b] != p)
                        return false;
                return true;
            }

            auto assign(Vertex v, int c) -> void
            {
                colour[v] = c;
                for (auto w : g.neighbours(v)) {
                    ++count[w][c];
                    --uncoloured_neighbours[w];
                }
            }

            auto unassign(Vertex v) -> void
            {
                for (auto w : g.neighbours(v)) {
                    --count[w][colour[v]];
                    ++uncoloured_neighbours[w];
                }
                colour[v] = -1;
            }

            auto run(std::size_t i, int used) -> bool
            {
                check_deadline();
                if (i == order.size())
                    return mode != Mode::k1p || all_components_are_k1p(g, Colouring(k, colour), p);

                auto v = order[i];
                int limit = std::min(k, used + 1);
                for (int c = 0 ; c < limit ; ++c) {
                    bool ok = (mode == Mode::distance_two) ? distance_two_allowed(v, c) : star_allowed(v, c);
                    if (! ok)
                        continue;
                    assign(v, c);
                    if (mode == Mode::k1p) {
                        for (auto w : g.neighbours(v))
                            if (count[w][c] > p)
                                ok = false;
                        ok = ok && settled_ok(v);
                        for (auto w : g.neighbours(v))
                            ok = ok && settled_ok(w);
                    }
                    if (ok && run(i + 1, std::max(used, c + 1)))
                        return true;
                    unassign(v);
                }
                return false;
            }

            auto result() const -> Colouring
            {
                return Colouring(k, colour);
            }
        };
    }

    auto solve_star(const Graph & g, int k) -> optional<Colouring>
    {
        if (k < 1)
            throw Error(ErrorKind::invalid_parameter, "k must be at least 1");
        Search s(g, k, Mode::star);
        if (s.run(0, 0))
            return s.result();
        return std::nullopt;
    }

    auto solve_distance_two(const Graph & g, int k) -> optional<Colouring>
    {
        if (k < 1)
            throw Error(ErrorKind::invalid_parameter, "k must be at least 1");
        Search s(g, k, Mode::distance_two);
        if (s.run(0, 0))
            return s.result();
        return std::nullopt;
    }

    auto solve_all_components_k1p(const Graph & g, int k, int p, int exhaustive_limit) -> optional<Colouring>
    {
        if (k < 1 || p < 1)
            throw Error(ErrorKind::invalid_parameter, "k and p must be positive");

        if (g.size() <= exhaustive_limit) {
            vector<int> a(g.size(), 0);
            while (true) {
                check_deadline();
                Colouring f(k, a);
                if (all_components_are_k1p(g, f, p))
                    return f;
                std::size_t i = 0;
                while (i < a.size() && ++a[i] == k)
                    a[i++] = 0;
                if (i == a.size())
                    return std::nullopt;
            }
        }

        Search s(g, k, Mode::k1p, p);
        if (s.run(0, 0))
            return s.result();
        return std::nullopt;
    }

    auto regular_lower_bound(int d) -> int
    {
        if (d < 3)
            throw Error(ErrorKind::invalid_parameter, "lower bound needs d >= 3");
        return (d + 4 + 1) / 2;
    }
}
