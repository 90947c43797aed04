/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <starhom/colouring.hh>
#include <starhom/constructions.hh>
#include <starhom/homomorphism.hh>
#include <starhom/orientation.hh>
#include <starhom/structure.hh>
#include <starhom/verify.hh>

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

using namespace starhom;
using std::string;
using std::vector;

namespace
{
    auto naive_lbh(const Graph & g, const Graph & h, const vector<Vertex> & a) -> bool
    {
        for (Vertex v = 0 ; v < g.size() ; ++v) {
            vector<Vertex> imgs;
            for (auto w : g.neighbours(v))
                imgs.push_back(a[w]);
            std::sort(imgs.begin(), imgs.end());
            vector<Vertex> want(h.neighbours(a[v]).begin(), h.neighbours(a[v]).end());
            std::sort(want.begin(), want.end());
            if (imgs != want)
                return false;
        }
        return true;
    }

    auto naive_obh(const OrientedGraph & g, const OrientedGraph & h, const vector<Vertex> & a) -> bool
    {
        for (auto [u, v] : g.arcs())
            if (! h.has_arc(a[u], a[v]))
                return false;
        for (Vertex v = 0 ; v < g.size() ; ++v) {
            vector<Vertex> imgs;
            for (auto w : g.out_neighbours(v))
                imgs.push_back(a[w]);
            std::sort(imgs.begin(), imgs.end());
            vector<Vertex> want(h.out_neighbours(a[v]).begin(), h.out_neighbours(a[v]).end());
            std::sort(want.begin(), want.end());
            if (imgs != want)
                return false;
        }
        return true;
    }

    auto for_each_map(int n, int m, const std::function<bool (const vector<Vertex> &)> & fn) -> void
    {
        vector<Vertex> a(n, 0);
        while (true) {
            if (fn(a))
                return;
            int i = 0;
            while (i < n && ++a[i] == m)
                a[i++] = 0;
            if (i == n)
                return;
        }
    }

    struct Named
    {
        std::map<string, int> id;
        vector<string> names;

        auto operator() (const string & s) -> int
        {
            auto [it, fresh] = id.emplace(s, int(names.size()));
            if (fresh)
                names.push_back(s);
            return it->second;
        }
    };

    // the drawn 12-vertex graph onto the 4-vertex graph, vertex ab going to a
    auto figure_lbh() -> std::tuple<Graph, Graph, VertexMap>
    {
        Named nm;
        for (int a = 0 ; a < 4 ; ++a)
            for (int b = 0 ; b < 3 ; ++b)
                nm(std::to_string(a) + std::to_string(b));
        vector<string> cycle{ "10", "20", "30", "11", "21", "31", "12", "22", "32" };
        vector<Edge> es;
        for (std::size_t i = 0 ; i < cycle.size() ; ++i)
            es.emplace_back(nm(cycle[i]), nm(cycle[(i + 1) % cycle.size()]));
        for (auto [a, b] : vector<std::pair<string, string>>{ { "00", "10" }, { "01", "11" }, { "02", "12" },
                { "22", "01" }, { "21", "02" }, { "20", "00" } })
            es.emplace_back(nm(a), nm(b));
        Graph h(4, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 1 }, { 0, 2 } });
        vector<Vertex> psi;
        for (auto & s : nm.names)
            psi.push_back(s[0] - '0');
        return { Graph(12, es), h, VertexMap(4, psi) };
    }

    auto figure_obh() -> std::tuple<OrientedGraph, OrientedGraph, VertexMap>
    {
        Named nm;
        vector<std::pair<string, string>> drawn{ { "00", "10" }, { "01", "10" }, { "02", "10" }, { "10", "20" },
            { "20", "30" }, { "30", "11" }, { "11", "21" }, { "21", "31" }, { "31", "10" } };
        vector<Arc> arcs;
        for (auto & [a, b] : drawn) {
            int x = nm(a), y = nm(b);
            arcs.emplace_back(x, y);
        }
        OrientedGraph h(4, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 1 } });
        vector<Vertex> psi;
        for (auto & s : nm.names)
            psi.push_back(s[0] - '0');
        return { OrientedGraph(int(nm.names.size()), arcs), h, VertexMap(4, psi) };
    }

    auto mod_map(int n, int m) -> VertexMap
    {
        vector<Vertex> a;
        for (int i = 0 ; i < n ; ++i)
            a.push_back(i % m);
        return VertexMap(m, a);
    }

    auto kind_of(const std::function<void ()> & fn) -> std::optional<ErrorKind>
    {
        try {
            fn();
        }
        catch (const Error & e) {
            return e.kind();
        }
        return std::nullopt;
    }

    auto lk4() -> OrientedGraph
    {
        return oriented_line_graph(complete_graph(4)).graph;
    }
}

TEST_CASE("vertex maps validate their images")
{
    CHECK(kind_of([] { VertexMap(2, { 0, 2 }); }) == ErrorKind::malformed_map);
    CHECK(kind_of([] { is_homomorphism(complete_graph(3), complete_graph(3), VertexMap::identity(2)); })
            == ErrorKind::malformed_map);
}

TEST_CASE("plain and local homomorphism examples")
{
    CHECK(is_homomorphism(complete_graph(3), complete_graph(3), VertexMap::identity(3)));
    CHECK(is_homomorphism(cycle_graph(6), complete_graph(2), mod_map(6, 2)));
    CHECK(! is_homomorphism(complete_graph(2), complete_graph(2), VertexMap(2, { 0, 0 })));

    CHECK(! is_lbh(cycle_graph(6), complete_graph(2), mod_map(6, 2)));
    CHECK(! is_locally_injective(cycle_graph(6), complete_graph(2), mod_map(6, 2)));
    CHECK(is_lbh(cycle_graph(6), cycle_graph(3), mod_map(6, 3)));

    auto [g, h, psi] = figure_lbh();
    CHECK(g.edge_count() == 15);
    CHECK(is_lbh(g, h, psi));
    CHECK(naive_lbh(g, h, psi.images()));
    CHECK(is_degree_preserving(g, h, psi));
}

TEST_CASE("oriented homomorphism examples")
{
    auto [gd, hd, psi] = figure_obh();
    CHECK(gd.size() == 9);
    CHECK(is_obh(gd, hd, psi));
    CHECK(naive_obh(gd, hd, psi.images()));
    CHECK(! is_degree_preserving(gd.underlying(), hd.underlying(), psi));

    CHECK(is_obh(directed_cycle(6), directed_cycle(3), mod_map(6, 3)));
    vector<Arc> arcs = directed_cycle(6).arcs();
    std::swap(arcs[0].first, arcs[0].second);
    OrientedGraph bent(6, arcs);
    CHECK(! is_obh(bent, directed_cycle(3), mod_map(6, 3)));
    CHECK(! is_oriented_homomorphism(bent, directed_cycle(3), mod_map(6, 3)));
}

TEST_CASE("LBH search examples")
{
    auto w = find_lbh(cube_q3(), complete_graph(4));
    REQUIRE(w);
    CHECK(is_lbh(cube_q3(), complete_graph(4), *w));
    auto ls = lstar(complete_graph(4)).graph;
    auto lk = line_graph(complete_graph(4)).graph;
    w = find_lbh(ls, lk);
    REQUIRE(w);
    CHECK(is_lbh(ls, lk, *w));
    CHECK(! find_lbh(complete_graph(4), cube_q3()));

    auto [g, h, psi] = figure_lbh();
    auto found = find_lbh(g, h);
    REQUIRE(found);
    CHECK(naive_lbh(g, h, found->images()));
}

TEST_CASE("LBH search agrees with enumeration over all maps")
{
    Random rng(41);
    int positives = 0;
    for (int trial = 0 ; trial < 120 ; ++trial) {
        int n = 1 + int(rng() % 7), m = 1 + int(rng() % 4);
        auto g = trial % 3 ? random_gnp(n, 0.5, rng) : cycle_graph(3 * (1 + int(rng() % 2)));
        auto h = trial % 3 ? random_gnp(m, 0.6, rng) : cycle_graph(3);
        bool exists = false;
        for_each_map(g.size(), h.size(), [&] (const vector<Vertex> & a) { return exists = naive_lbh(g, h, a); });
        auto w = find_lbh(g, h);
        CHECK(w.has_value() == exists);
        if (w)
            CHECK(naive_lbh(g, h, w->images()));
        positives += exists;
    }
    CHECK(positives > 10);
}

TEST_CASE("OBH search examples")
{
    CHECK(find_obh(lk4(), lk4()));
    CHECK(! find_obh(directed_cycle(4), directed_cycle(3)));
    auto two = disjoint_union(lk4(), 2);
    auto w = find_obh(two, lk4());
    REQUIRE(w);
    CHECK(is_obh(two, lk4(), *w));

    auto [gd, hd, psi] = figure_obh();
    auto found = find_obh(gd, hd);
    REQUIRE(found);
    CHECK(naive_obh(gd, hd, found->images()));
}

TEST_CASE("OBH search agrees with enumeration over all maps")
{
    Random rng(43);
    int positives = 0;
    for (int trial = 0 ; trial < 150 ; ++trial) {
        int n = 1 + int(rng() % 7), m = 1 + int(rng() % 4);
        auto gd = random_orientation(random_gnp(n, 0.5, rng), rng);
        auto hd = trial % 2 ? random_orientation(random_gnp(m, 0.7, rng), rng) : directed_cycle(1 + int(rng() % 3) + 2);
        bool exists = false;
        for_each_map(gd.size(), hd.size(), [&] (const vector<Vertex> & a) { return exists = naive_obh(gd, hd, a); });
        auto w = find_obh(gd, hd);
        CHECK(w.has_value() == exists);
        if (w)
            CHECK(naive_obh(gd, hd, w->images()));
        positives += exists;
    }
    CHECK(positives > 10);
}

TEST_CASE("orientation OBH search agrees with star colourability")
{
    auto target = lk4();
    Random rng(47);
    vector<Graph> gs{ lstar(complete_graph(4)).graph, octahedron(), complete_graph(5), antiprism(4) };
    for (int i = 0 ; i < 4 ; ++i)
        gs.push_back(random_regular(6 + 2 * i, 4, rng));
    for (auto & g : gs) {
        auto r = find_orientation_obh(g, target);
        CHECK(r.has_value() == solve_star(g, 4).has_value());
        if (r) {
            CHECK(shadow(r->first) == g);
            CHECK(is_obh(r->first, target, r->second));
        }
    }
}

TEST_CASE("from star colourings to OBHs and back")
{
    auto olg = oriented_line_graph(complete_graph(4));
    auto ls = shadow(olg.graph);
    vector<int> p2;
    for (auto & [i, j] : olg.labels)
        p2.push_back(j);
    auto [o, psi] = star_to_obh(ls, Colouring(4, p2));
    CHECK(o == olg.graph);
    CHECK(psi == VertexMap::identity(12));

    auto lcl8 = line_graph(circular_ladder(8)).graph;
    auto f = solve_star(lcl8, 4);
    REQUIRE(f);
    auto [od, phi] = star_to_obh(lcl8, *f);
    CHECK(is_obh(od, olg.graph, phi));
    CHECK(naive_obh(od, olg.graph, phi.images()));
    CHECK(obh_to_colouring(od, phi, 2) == *f);
    CHECK(is_mini(ColouredOrientation(od, *f)));
    for (auto & c : preimage_partition(phi).classes)
        CHECK(c.size() == 2);

    CHECK(kind_of([] { star_to_obh(cycle_graph(4), Colouring(2, { 0, 1, 0, 1 })); })
            == ErrorKind::precondition_violation);

    auto id = obh_to_colouring(olg.graph, VertexMap::identity(12), 2);
    CHECK(id.assignment() == p2);
    CHECK(kind_of([&] { obh_to_colouring(directed_cycle(12), VertexMap::identity(12), 2); })
            == ErrorKind::precondition_violation);

    auto two = disjoint_union(olg.graph, 2);
    auto col = obh_to_colouring(two, mod_map(24, 12), 2);
    CHECK(is_mini(ColouredOrientation(two, col)));
}

TEST_CASE("carrying star colourings back along locally injective maps")
{
    CHECK(compose_with_colouring(VertexMap::identity(3), Colouring(3, { 2, 0, 1 })) == Colouring(3, { 2, 0, 1 }));
    auto c6 = compose_with_colouring(mod_map(6, 3), Colouring(3, { 0, 1, 2 }));
    CHECK(c6.assignment() == vector<int>{ 0, 1, 2, 0, 1, 2 });
    CHECK(is_star_colouring(cycle_graph(6), c6));
    CHECK(kind_of([] { compose_with_colouring(mod_map(6, 3), Colouring(2, { 0, 1 })); })
            == ErrorKind::malformed_map);

    auto [g, h, psi] = figure_lbh();
    int seen = 0;
    for_each_map(4, 4, [&] (const vector<Vertex> & c) {
        Colouring hc(4, vector<int>(c.begin(), c.end()));
        if (is_star_colouring(h, hc)) {
            ++seen;
            CHECK(is_star_colouring(g, compose_with_colouring(psi, hc)));
        }
        return false;
    });
    CHECK(seen > 0);

    // random locally injective maps found by search, with every star colouring of the target
    Random rng(53);
    int pairs = 0;
    for (int trial = 0 ; trial < 80 ; ++trial) {
        auto hh = random_gnp(2 + int(rng() % 4), 0.6, rng);
        auto gg = disjoint_union(hh, 2);
        auto w = find_lbh(gg, hh);
        REQUIRE(w);
        CHECK(is_locally_injective(gg, hh, *w));
        int k = 3;
        for_each_map(hh.size(), k, [&] (const vector<Vertex> & c) {
            Colouring hc(k, vector<int>(c.begin(), c.end()));
            if (is_star_colouring(hh, hc)) {
                ++pairs;
                CHECK(is_star_colouring(gg, compose_with_colouring(*w, hc)));
            }
            return false;
        });
    }
    CHECK(pairs > 0);
}

TEST_CASE("lifting LBHs to line graphs")
{
    CHECK(lift_line(complete_graph(3), complete_graph(3), VertexMap::identity(3)) == VertexMap::identity(3));
    auto l6 = lift_line(cycle_graph(6), cycle_graph(3), mod_map(6, 3));
    CHECK(is_lbh(line_graph(cycle_graph(6)).graph, line_graph(cycle_graph(3)).graph, l6));

    auto w = find_lbh(cube_q3(), complete_graph(4));
    REQUIRE(w);
    auto lifted = lift_line(cube_q3(), complete_graph(4), *w);
    auto lq = line_graph(cube_q3()).graph, lk = line_graph(complete_graph(4)).graph;
    CHECK(is_lbh(lq, lk, lifted));
    CHECK(naive_lbh(lq, lk, lifted.images()));

    CHECK(kind_of([] { lift_line(cycle_graph(6), complete_graph(2), mod_map(6, 2)); })
            == ErrorKind::precondition_violation);
}

TEST_CASE("lifting LBHs to clique graphs")
{
    auto k1 = lift_clique(complete_graph(3), complete_graph(3), VertexMap::identity(3), 3);
    CHECK(k1.source_size() == 1);
    CHECK(k1.target_size() == 1);

    // edges are the maximal cliques of triangle-free graphs
    auto c8 = lift_clique(cycle_graph(8), cycle_graph(4), mod_map(8, 4), 2);
    CHECK(is_lbh(clique_graph(cycle_graph(8)).graph, clique_graph(cycle_graph(4)).graph, c8));

    // K3 has a 3-clique, so edges are not its maximal cliques
    CHECK(kind_of([] { lift_clique(cycle_graph(6), cycle_graph(3), mod_map(6, 3), 2); })
            == ErrorKind::precondition_violation);

    // L(Q3) -> L(K4): the clique graphs are Q3 and a 6-regular graph on 8 vertices, so no LBH
    auto w = find_lbh(cube_q3(), complete_graph(4));
    REQUIRE(w);
    auto lq = line_graph(cube_q3()).graph, lk = line_graph(complete_graph(4)).graph;
    auto lifted = lift_line(cube_q3(), complete_graph(4), *w);
    auto kq = clique_graph(lq).graph, kk = clique_graph(lk).graph;
    CHECK(kq.regular_degree() == 3);
    CHECK(kk.regular_degree() == 6);
    CHECK(! find_lbh(kq, kk));
    CHECK(kind_of([&] { lift_clique(lq, lk, lifted, 3); }) == ErrorKind::theorem_violation);

    // a triangle-free target, where the lemma applies
    auto bk = bipartite_double(complete_graph(4)).graph;
    auto id = find_lbh(disjoint_union(bk, 2), bk);
    REQUIRE(id);
    auto lid = lift_line(disjoint_union(bk, 2), bk, *id);
    auto l2 = line_graph(disjoint_union(bk, 2)).graph, lb = line_graph(bk).graph;
    auto star = lift_clique(l2, lb, lid, 3);
    CHECK(is_lbh(clique_graph(l2).graph, clique_graph(lb).graph, star));
}

TEST_CASE("the pair-forgetting map")
{
    auto k2 = lstar_projection(complete_graph(2));
    CHECK(k2.images() == vector<Vertex>{ 0, 0 });
    for (auto & h : { complete_graph(4), petersen() }) {
        auto psi = lstar_projection(h);
        CHECK(psi.source_size() == 2 * h.edge_count());
        CHECK(is_lbh(lstar(h).graph, line_graph(h).graph, psi));
        CHECK(naive_lbh(lstar(h).graph, line_graph(h).graph, psi.images()));
        for (auto & c : preimage_partition(psi).classes)
            CHECK(c.size() == 2);
    }
    CHECK(kind_of([] { lstar_projection(Graph(3, {})); }) == ErrorKind::invalid_input);
}

TEST_CASE("promoting OBHs to LBHs")
{
    auto ls = lstar(complete_graph(4)).graph;
    auto id = promote_obh_to_lbh(ls, lk4(), VertexMap::identity(12), 2);
    CHECK(id == VertexMap::identity(12));

    auto lcl8 = line_graph(circular_ladder(8)).graph;
    auto f = solve_star(lcl8, 4);
    REQUIRE(f);
    auto [od, psi] = star_to_obh(lcl8, *f);
    auto lbh = promote_obh_to_lbh(lcl8, od, psi, 2);
    CHECK(is_lbh(lcl8, ls, lbh));

    // an OBH onto the oriented line graph from a 4-regular graph with an induced claw
    Random rng(59);
    bool tried = false;
    for (std::uint64_t s = 0 ; s < 6 && ! tried ; ++s) {
        auto cover = switched_cover(2, 2, 40, s);
        auto g = shadow(cover.orientation);
        if (find_induced_star(g, 3)) {
            tried = true;
            CHECK(kind_of([&] { promote_obh_to_lbh(g, cover.orientation, cover.psi, 2); })
                    == ErrorKind::precondition_violation);
        }
    }
    CHECK(tried);
    CHECK(kind_of([&] { promote_obh_to_lbh(octahedron(), random_orientation(octahedron(), rng), VertexMap(12, vector<Vertex>(6, 0)), 2); })
            == ErrorKind::precondition_violation);
}

TEST_CASE("composition of LBHs")
{
    auto lcl8 = line_graph(circular_ladder(8)).graph;
    auto f = solve_star(lcl8, 4);
    REQUIRE(f);
    auto [od, psi] = star_to_obh(lcl8, *f);
    auto first = promote_obh_to_lbh(lcl8, od, psi, 2);
    auto second = lstar_projection(complete_graph(4));
    auto both = compose(first, second);
    CHECK(is_lbh(lcl8, line_graph(complete_graph(4)).graph, both));
    for (Vertex v = 0 ; v < lcl8.size() ; ++v)
        CHECK(both[v] == second[first[v]]);
}

TEST_CASE("LBHs carry small diameter-two subgraphs onto copies")
{
    auto [g, h, psi] = figure_lbh();
    vector<std::pair<VertexMap, std::pair<Graph, Graph>>> cases;
    cases.push_back({ psi, { g, h } });
    auto w = find_lbh(cube_q3(), complete_graph(4));
    cases.push_back({ *w, { cube_q3(), complete_graph(4) } });
    cases.push_back({ lstar_projection(complete_graph(4)), { lstar(complete_graph(4)).graph, line_graph(complete_graph(4)).graph } });
    for (auto & [m, gh] : cases) {
        auto & [gg, hh] = gh;
        for (auto & pattern : { complete_graph(3), diamond(), star_graph(3) }) {
            auto copy = find_subgraph(gg, pattern);
            if (! copy)
                continue;
            for (auto [a, b] : pattern.edges())
                CHECK(hh.has_edge(m[(*copy)[a]], m[(*copy)[b]]));
            std::set<Vertex> images;
            for (auto v : *copy)
                images.insert(m[v]);
            CHECK(images.size() == copy->size());
        }
    }
}

TEST_CASE("LBH between orientations matches LBH between shadows")
{
    Random rng(61);
    auto ls = lstar(complete_graph(4)).graph;
    auto lk = line_graph(complete_graph(4)).graph;
    auto psi = lstar_projection(complete_graph(4));
    for (int trial = 0 ; trial < 20 ; ++trial) {
        auto og = random_orientation(ls, rng);
        auto oh = random_orientation(lk, rng);
        CHECK(is_lbh(og.underlying(), oh.underlying(), psi) == is_lbh(ls, lk, psi));
    }
}

TEST_CASE("arc 2-switches")
{
    auto two = disjoint_union(directed_cycle(3), 2);
    auto j = arc_2switch(two, { 0, 1 }, { 3, 4 });
    CHECK(j.has_arc(0, 4));
    CHECK(j.has_arc(3, 1));
    CHECK(! j.has_arc(0, 1));
    CHECK(! j.has_arc(3, 4));
    CHECK(is_obh(j, directed_cycle(3), mod_map(6, 3)));
    CHECK(is_lbh(j.underlying(), cycle_graph(3), mod_map(6, 3)));

    CHECK(kind_of([&] { arc_2switch(two, { 0, 1 }, { 1, 2 }); }) == ErrorKind::invalid_switch);
    CHECK(kind_of([&] { arc_2switch(directed_cycle(4), { 0, 1 }, { 2, 3 }); }) == ErrorKind::invalid_switch);

    // switches between copies keep the map an OBH
    for (std::uint64_t s = 0 ; s < 5 ; ++s) {
        auto cover = switched_cover(2, 3, 30, s);
        CHECK(cover.switches > 0);
        CHECK(is_obh(cover.orientation, lk4(), cover.psi));
        CHECK(naive_obh(cover.orientation, lk4(), cover.psi.images()));
    }
}

TEST_CASE("degree-preserving OBHs to strongly connected targets have equal classes")
{
    for (std::uint64_t s = 0 ; s < 5 ; ++s) {
        auto cover = switched_cover(2, 2 + int(s % 2), 25, s);
        CHECK(is_degree_preserving(cover.orientation.underlying(), lk4().underlying(), cover.psi));
        auto part = preimage_partition(cover.psi);
        CHECK(part.equal_sizes());
        CHECK(part.classes[0].size() == std::size_t(cover.orientation.size() / 12));
    }
    CHECK(preimage_partition(VertexMap::identity(5)).equal_sizes());
    CHECK(! preimage_partition(VertexMap(2, { 0, 0, 1 })).equal_sizes());
}

TEST_CASE("OBHs onto strongly connected graphs of the same order are isomorphisms")
{
    CHECK(obh_is_isomorphism_check(lk4(), lk4(), VertexMap::identity(12)));
    CHECK(! obh_is_isomorphism_check(disjoint_union(lk4(), 2), lk4(), mod_map(24, 12)));
    CHECK(obh_is_isomorphism_check(directed_cycle(3), directed_cycle(3), VertexMap(3, { 1, 2, 0 })));
    CHECK(kind_of([] { obh_is_isomorphism_check(directed_cycle(3), directed_cycle(3), VertexMap(3, { 0, 0, 0 })); })
            == ErrorKind::precondition_violation);
}
