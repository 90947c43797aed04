/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <starhom/colouring.hh>
#include <starhom/constructions.hh>

#include <doctest.h>

#include <functional>

using namespace starhom;
using std::vector;

namespace
{
    auto proj2_lstar(int q) -> std::pair<Graph, Colouring>
    {
        auto olg = oriented_line_graph(complete_graph(q));
        vector<int> a;
        for (auto & [i, j] : olg.labels)
            a.push_back(j);
        return { shadow(olg.graph), Colouring(q, a) };
    }

    // proper, and no path a-b-c-d with f(a) = f(c) and f(b) = f(d)
    auto quadruple_star(const Graph & g, const vector<int> & f) -> bool
    {
        for (auto [u, v] : g.edges())
            if (f[u] == f[v])
                return false;
        for (Vertex b = 0 ; b < g.size() ; ++b)
            for (auto a : g.neighbours(b))
                for (auto c : g.neighbours(b))
                    if (c != a && f[a] == f[c])
                        for (auto d : g.neighbours(c))
                            if (d != b && d != a && f[d] == f[b])
                                return false;
        return true;
    }

    auto pairwise_distance_two(const Graph & g, const vector<int> & f) -> bool
    {
        for (Vertex u = 0 ; u < g.size() ; ++u)
            for (Vertex v = u + 1 ; v < g.size() ; ++v) {
                bool close = g.has_edge(u, v);
                for (auto w : g.neighbours(u))
                    if (g.has_edge(w, v))
                        close = true;
                if (close && f[u] == f[v])
                    return false;
            }
        return true;
    }

    // every bicoloured component is K_{1,p}, computed from scratch on the two-colour subgraph;
    // a lone vertex is a K_1 component
    auto components_k1p(const Graph & g, const vector<int> & f, int k, int p) -> bool
    {
        for (auto [u, v] : g.edges())
            if (f[u] == f[v])
                return false;
        for (int a = 0 ; a < k ; ++a)
            for (int b = a + 1 ; b < k ; ++b) {
                vector<int> seen(g.size(), 0);
                for (Vertex s = 0 ; s < g.size() ; ++s) {
                    if (seen[s] || (f[s] != a && f[s] != b))
                        continue;
                    vector<Vertex> comp{ s };
                    seen[s] = 1;
                    for (std::size_t i = 0 ; i < comp.size() ; ++i)
                        for (auto w : g.neighbours(comp[i]))
                            if (! seen[w] && (f[w] == a || f[w] == b)) {
                                seen[w] = 1;
                                comp.push_back(w);
                            }
                    int edges = 0, centres = 0;
                    for (auto x : comp) {
                        int d = 0;
                        for (auto w : g.neighbours(x))
                            if (f[w] == a || f[w] == b)
                                ++d;
                        edges += d;
                        if (d == p)
                            ++centres;
                    }
                    edges /= 2;
                    if (int(comp.size()) != p + 1 || edges != p || centres < 1)
                        return false;
                }
            }
        return true;
    }

    auto for_each_colouring(int n, int k, const std::function<void (const vector<int> &)> & fn) -> void
    {
        vector<int> a(n, 0);
        while (true) {
            fn(a);
            int i = 0;
            while (i < n && ++a[i] == k)
                a[i++] = 0;
            if (i == n)
                return;
        }
    }
}

TEST_CASE("colourings validate their range")
{
    CHECK_THROWS_AS(Colouring(2, { 0, 2 }), Error);
    CHECK_THROWS_AS(Colouring(2, { -1, 0 }), Error);
    Colouring f(5, { 0, 1, 1 });
    CHECK(f.k() == 5);
    CHECK(f.used_colours() == 2);
    CHECK_THROWS_AS(is_proper(complete_graph(2), f), Error);
}

TEST_CASE("proper colourings")
{
    CHECK(is_proper(complete_graph(2), Colouring(2, { 0, 1 })));
    CHECK(! is_proper(complete_graph(2), Colouring(2, { 0, 0 })));
    auto [g, f] = proj2_lstar(4);
    CHECK(is_proper(g, f));
}

TEST_CASE("bicoloured components")
{
    auto p4 = path_graph(4);
    auto comps = bicoloured_components(p4, Colouring(2, { 0, 1, 0, 1 }));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].vertices.size() == 4);
    CHECK(comps[0].shape == ComponentShape::non_star);

    auto claw = star_graph(3);
    comps = bicoloured_components(claw, Colouring(2, { 0, 1, 1, 1 }));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].shape == ComponentShape::star);
    CHECK(comps[0].centre == 0);
    CHECK(comps[0].leaves == 3);

    auto [g, f] = proj2_lstar(4);
    for (auto & c : bicoloured_components(g, f)) {
        CHECK(c.shape == ComponentShape::star);
        CHECK(c.leaves == 2);
    }

    CHECK_THROWS_AS(bicoloured_components(p4, Colouring(2, { 0, 0, 1, 0 })), Error);
}

TEST_CASE("star and distance-two checks on small examples")
{
    auto p4 = path_graph(4);
    CHECK(! is_star_colouring(p4, Colouring(2, { 0, 1, 0, 1 })));
    CHECK(is_star_colouring(p4, Colouring(3, { 0, 1, 2, 1 })));
    auto [g, f] = proj2_lstar(4);
    CHECK(is_star_colouring(g, f));

    auto c4 = cycle_graph(4);
    CHECK(is_distance_two(c4, Colouring(4, { 0, 1, 2, 3 })));
    CHECK(! is_distance_two(c4, Colouring(2, { 0, 1, 0, 1 })));
    auto k33 = complete_bipartite(3, 3);
    for_each_colouring(6, 5, [&] (const vector<int> & a) {
        if (is_distance_two(k33, Colouring(5, a)))
            FAIL("K33 has a distance-two 5-colouring");
    });

    CHECK(all_components_are_k1p(g, f, 2));
    CHECK(all_components_are_k1p(star_graph(3), Colouring(2, { 0, 1, 1, 1 }), 3));
    CHECK(! all_components_are_k1p(p4, Colouring(3, { 0, 1, 2, 1 }), 2));
}

TEST_CASE("star check agrees with the quadruple scan")
{
    Random rng(7);
    for (int trial = 0 ; trial < 300 ; ++trial) {
        int n = 2 + int(rng() % 9), k = 2 + int(rng() % 4);
        auto g = random_gnp(n, 0.45, rng);
        vector<int> a(n);
        for (auto & c : a)
            c = int(rng() % k);
        Colouring f(k, a);
        CHECK(is_star_colouring(g, f) == quadruple_star(g, a));
        CHECK(is_distance_two(g, f) == pairwise_distance_two(g, a));
        for (int p = 1 ; p <= 3 ; ++p)
            CHECK(all_components_are_k1p(g, f, p) == components_k1p(g, a, k, p));
    }
}

TEST_CASE("solvers agree with enumeration over all colourings")
{
    Random rng(19);
    for (int trial = 0 ; trial < 120 ; ++trial) {
        int n = 1 + int(rng() % 8), k = 1 + int(rng() % 4);
        auto g = random_gnp(n, 0.5, rng);
        bool star = false, d2 = false, k1p = false;
        int p = 1 + int(rng() % 2);
        for_each_colouring(n, k, [&] (const vector<int> & a) {
            star = star || quadruple_star(g, a);
            d2 = d2 || pairwise_distance_two(g, a);
            k1p = k1p || components_k1p(g, a, k, p);
        });
        auto s = solve_star(g, k);
        CHECK(s.has_value() == star);
        if (s)
            CHECK(quadruple_star(g, s->assignment()));
        auto d = solve_distance_two(g, k);
        CHECK(d.has_value() == d2);
        if (d)
            CHECK(pairwise_distance_two(g, d->assignment()));
        auto c = solve_all_components_k1p(g, k, p);
        CHECK(c.has_value() == k1p);
        auto c2 = solve_all_components_k1p(g, k, p, 0);
        CHECK(c2.has_value() == k1p);
        if (c2)
            CHECK(components_k1p(g, c2->assignment(), k, p));
    }
}

TEST_CASE("solver examples")
{
    CHECK(! solve_star(cycle_graph(4), 2));
    auto [g, f] = proj2_lstar(4);
    auto s = solve_star(g, 4);
    REQUIRE(s);
    CHECK(is_star_colouring(g, *s));
    CHECK(! solve_star(octahedron(), 4));
    CHECK(solve_distance_two(cube_q3(), 4));
    CHECK(! solve_distance_two(complete_bipartite(3, 3), 4));
    CHECK(solve_distance_two(complete_graph(1), 1));

    auto lcl8 = line_graph(circular_ladder(8)).graph;
    auto w = solve_star(lcl8, 4);
    REQUIRE(w);
    CHECK(is_star_colouring(lcl8, *w));
    CHECK(! solve_star(line_graph(petersen()).graph, 4));
}

TEST_CASE("star colourings of 2p-regular graphs with p+2 colours are exactly the K1p colourings")
{
    // every proper (p+2)-colouring, p = 2, on a few 4-regular graphs up to 12 vertices
    Random rng(23);
    vector<Graph> gs{ lstar(complete_graph(4)).graph, octahedron(), complete_graph(5), antiprism(4),
        random_regular(9, 4, rng), random_regular(10, 4, rng) };
    for (auto & g : gs) {
        int n = g.size();
        vector<int> a(n, 0);
        long star_count = 0;
        std::function<void (int)> rec = [&] (int v) {
            if (v == n) {
                Colouring f(4, a);
                bool s = is_star_colouring(g, f);
                CHECK(s == all_components_are_k1p(g, f, 2));
                star_count += s;
                return;
            }
            for (int c = 0 ; c < 4 ; ++c) {
                bool ok = true;
                for (auto w : g.neighbours(v))
                    if (w < v && a[w] == c)
                        ok = false;
                if (ok) {
                    a[v] = c;
                    rec(v + 1);
                }
            }
        };
        rec(0);
        CHECK((star_count > 0) == solve_star(g, 4).has_value());
    }
}

TEST_CASE("regular lower bound")
{
    CHECK(regular_lower_bound(3) == 4);
    CHECK(regular_lower_bound(4) == 4);
    CHECK(regular_lower_bound(6) == 5);
    CHECK_THROWS_AS(regular_lower_bound(2), Error);
}
