/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <starhom/homomorphism.hh>
#include <starhom/budget.hh>
#include <starhom/constructions.hh>
#include <starhom/orientation.hh>
#include <starhom/structure.hh>

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

using std::optional;
using std::pair;
using std::vector;

namespace starhom
{
    VertexMap::VertexMap(int target_size, vector<Vertex> images) :
        _source_size(int(images.size())),
        _target_size(target_size),
        _map(std::move(images))
    {
        for (std::size_t v = 0 ; v < _map.size() ; ++v)
            if (_map[v] < 0 || _map[v] >= target_size)
                throw Error(ErrorKind::malformed_map, "image of " + std::to_string(v) + " is "
                        + std::to_string(_map[v]) + ", target has " + std::to_string(target_size) + " vertices");
    }

    auto VertexMap::identity(int n) -> VertexMap
    {
        vector<Vertex> m(n);
        std::iota(m.begin(), m.end(), 0);
        return VertexMap(n, m);
    }

    auto PreimagePartition::equal_sizes() const -> bool
    {
        for (auto & c : classes)
            if (c.size() != classes.front().size())
                return false;
        return true;
    }

    namespace
    {
        auto check_sizes(int g, int h, const VertexMap & psi) -> void
        {
            if (psi.source_size() != g || psi.target_size() != h)
                throw Error(ErrorKind::malformed_map, "map is " + std::to_string(psi.source_size()) + " -> "
                        + std::to_string(psi.target_size()) + ", graphs are " + std::to_string(g) + " -> " + std::to_string(h));
        }

        auto injective_on(std::span<const Vertex> vs, const VertexMap & psi) -> bool
        {
            vector<Vertex> im;
            for (auto v : vs)
                im.push_back(psi[v]);
            std::sort(im.begin(), im.end());
            return std::adjacent_find(im.begin(), im.end()) == im.end();
        }

        // BFS order from maximum-degree roots, with each vertex's discovering parent
        auto bfs_order(const Graph & g) -> pair<vector<Vertex>, vector<Vertex>>
        {
            vector<Vertex> order, parent(g.size(), -1), roots(g.size());
            std::iota(roots.begin(), roots.end(), 0);
            std::stable_sort(roots.begin(), roots.end(), [&] (Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
            vector<char> seen(g.size(), 0);
            for (auto r : roots) {
                if (seen[r])
                    continue;
                seen[r] = 1;
                std::queue<Vertex> q;
                q.push(r);
                while (! q.empty()) {
                    auto v = q.front();
                    q.pop();
                    order.push_back(v);
                    for (auto w : g.neighbours(v))
                        if (! seen[w]) {
                            seen[w] = 1;
                            parent[w] = v;
                            q.push(w);
                        }
                }
            }
            return { order, parent };
        }

        auto all_vertices(int n) -> vector<Vertex>
        {
            vector<Vertex> r(n);
            std::iota(r.begin(), r.end(), 0);
            return r;
        }
    }

    auto is_homomorphism(const Graph & g, const Graph & h, const VertexMap & psi) -> bool
    {
        check_sizes(g.size(), h.size(), psi);
        for (auto [u, v] : g.edges())
            if (! h.has_edge(psi[u], psi[v]))
                return false;
        return true;
    }

    auto is_locally_injective(const Graph & g, const Graph & h, const VertexMap & psi) -> bool
    {
        if (! is_homomorphism(g, h, psi))
            return false;
        for (Vertex v = 0 ; v < g.size() ; ++v)
            if (! injective_on(g.neighbours(v), psi))
                return false;
        return true;
    }

    auto is_lbh(const Graph & g, const Graph & h, const VertexMap & psi) -> bool
    {
        if (! is_locally_injective(g, h, psi))
            return false;
        for (Vertex v = 0 ; v < g.size() ; ++v)
            if (g.degree(v) != h.degree(psi[v]))
                return false;
        return true;
    }

    auto is_oriented_homomorphism(const OrientedGraph & gd, const OrientedGraph & hd, const VertexMap & psi) -> bool
    {
        check_sizes(gd.size(), hd.size(), psi);
        for (auto [u, v] : gd.arcs())
            if (! hd.has_arc(psi[u], psi[v]))
                return false;
        return true;
    }

    auto is_out_injective(const OrientedGraph & gd, const OrientedGraph & hd, const VertexMap & psi) -> bool
    {
        if (! is_oriented_homomorphism(gd, hd, psi))
            return false;
        for (Vertex v = 0 ; v < gd.size() ; ++v)
            if (! injective_on(gd.out_neighbours(v), psi))
                return false;
        return true;
    }

    auto is_obh(const OrientedGraph & gd, const OrientedGraph & hd, const VertexMap & psi) -> bool
    {
        if (! is_out_injective(gd, hd, psi))
            return false;
        for (Vertex v = 0 ; v < gd.size() ; ++v)
            if (gd.out_degree(v) != hd.out_degree(psi[v]))
                return false;
        return true;
    }

    auto is_degree_preserving(const Graph & g, const Graph & h, const VertexMap & psi) -> bool
    {
        check_sizes(g.size(), h.size(), psi);
        for (Vertex v = 0 ; v < g.size() ; ++v)
            if (g.degree(v) != h.degree(psi[v]))
                return false;
        return true;
    }

    auto find_lbh(const Graph & g, const Graph & h) -> optional<VertexMap>
    {
        if (g.size() == 0)
            return VertexMap(h.size(), {});
        if (h.size() == 0)
            return std::nullopt;

        auto [order, parent] = bfs_order(g);
        vector<Vertex> img(g.size(), -1);
        auto everything = all_vertices(h.size());

        auto fits = [&] (Vertex v, Vertex c) -> bool {
            if (g.degree(v) != h.degree(c))
                return false;
            vector<Vertex> around;
            for (auto w : g.neighbours(v)) {
                if (img[w] == -1)
                    continue;
                if (! h.has_edge(img[w], c))
                    return false;
                around.push_back(img[w]);
                for (auto x : g.neighbours(w))
                    if (x != v && img[x] == c)
                        return false;
            }
            std::sort(around.begin(), around.end());
            return std::adjacent_find(around.begin(), around.end()) == around.end();
        };

        std::function<bool (std::size_t)> run = [&] (std::size_t i) -> bool {
            check_deadline();
            if (i == order.size())
                return true;
            auto v = order[i];
            auto cands = parent[v] == -1 ? std::span<const Vertex>(everything) : h.neighbours(img[parent[v]]);
            for (auto c : cands) {
                if (! fits(v, c))
                    continue;
                img[v] = c;
                if (run(i + 1))
                    return true;
                img[v] = -1;
            }
            return false;
        };

        if (! run(0))
            return std::nullopt;
        VertexMap result(h.size(), img);
        if (! is_lbh(g, h, result))
            throw Error(ErrorKind::theorem_violation, "search produced a map that is not an LBH");
        return result;
    }

    auto find_obh(const OrientedGraph & gd, const OrientedGraph & hd, bool degree_preserving) -> optional<VertexMap>
    {
        if (gd.size() == 0)
            return VertexMap(hd.size(), {});
        if (hd.size() == 0)
            return std::nullopt;

        auto & g = gd.underlying();
        auto [order, parent] = bfs_order(g);
        vector<Vertex> img(gd.size(), -1);
        auto everything = all_vertices(hd.size());

        auto fits = [&] (Vertex v, Vertex c) -> bool {
            if (gd.out_degree(v) != hd.out_degree(c))
                return false;
            if (degree_preserving && g.degree(v) != hd.underlying().degree(c))
                return false;
            vector<Vertex> outs;
            for (auto w : gd.out_neighbours(v)) {
                if (img[w] == -1)
                    continue;
                if (! hd.has_arc(c, img[w]))
                    return false;
                outs.push_back(img[w]);
            }
            std::sort(outs.begin(), outs.end());
            if (std::adjacent_find(outs.begin(), outs.end()) != outs.end())
                return false;
            for (auto w : gd.in_neighbours(v)) {
                if (img[w] == -1)
                    continue;
                if (! hd.has_arc(img[w], c))
                    return false;
                for (auto x : gd.out_neighbours(w))
                    if (x != v && img[x] == c)
                        return false;
            }
            return true;
        };

        std::function<bool (std::size_t)> run = [&] (std::size_t i) -> bool {
            check_deadline();
            if (i == order.size())
                return true;
            auto v = order[i];
            std::span<const Vertex> cands = everything;
            if (parent[v] != -1)
                cands = gd.has_arc(parent[v], v) ? hd.out_neighbours(img[parent[v]]) : hd.in_neighbours(img[parent[v]]);
            for (auto c : cands) {
                if (! fits(v, c))
                    continue;
                img[v] = c;
                if (run(i + 1))
                    return true;
                img[v] = -1;
            }
            return false;
        };

        if (! run(0))
            return std::nullopt;
        VertexMap result(hd.size(), img);
        if (! is_obh(gd, hd, result))
            throw Error(ErrorKind::theorem_violation, "search produced a map that is not an OBH");
        return result;
    }

    auto find_orientation_obh(const Graph & g, const OrientedGraph & hd) -> optional<pair<OrientedGraph, VertexMap>>
    {
        auto & hs = hd.underlying();
        auto [order, parent] = bfs_order(g);
        vector<Vertex> img(g.size(), -1);
        vector<int> outs(g.size(), 0), unmapped(g.size());
        for (Vertex v = 0 ; v < g.size() ; ++v)
            unmapped[v] = g.degree(v);
        auto everything = all_vertices(hd.size());

        // after mapping v to c, each mapped neighbour w sees one arc more
        auto fits = [&] (Vertex v, Vertex c) -> bool {
            int out_here = 0, open_here = 0;
            vector<Vertex> out_images;
            for (auto w : g.neighbours(v)) {
                if (img[w] == -1) {
                    ++open_here;
                    continue;
                }
                if (hd.has_arc(c, img[w])) {
                    ++out_here;
                    out_images.push_back(img[w]);
                }
                else if (hd.has_arc(img[w], c)) {
                    // w -> v: injectivity and capacity at w
                    for (auto x : g.neighbours(w))
                        if (x != v && img[x] == c && hd.has_arc(img[w], c))
                            return false;
                    if (outs[w] + 1 > hd.out_degree(img[w]))
                        return false;
                }
                else
                    return false;

                // v -> w: w loses its last chance if it is still short
                if (hd.has_arc(c, img[w]) && outs[w] + (unmapped[w] - 1) < hd.out_degree(img[w]))
                    return false;
            }
            std::sort(out_images.begin(), out_images.end());
            if (std::adjacent_find(out_images.begin(), out_images.end()) != out_images.end())
                return false;
            return out_here <= hd.out_degree(c) && out_here + open_here >= hd.out_degree(c);
        };

        auto apply = [&] (Vertex v, Vertex c, int sign) {
            for (auto w : g.neighbours(v)) {
                unmapped[w] -= sign;
                if (img[w] == -1)
                    continue;
                if (hd.has_arc(c, img[w]))
                    outs[v] += sign;
                else
                    outs[w] += sign;
            }
        };

        std::function<bool (std::size_t)> run = [&] (std::size_t i) -> bool {
            check_deadline();
            if (i == order.size())
                return true;
            auto v = order[i];
            auto cands = parent[v] == -1 ? std::span<const Vertex>(everything) : hs.neighbours(img[parent[v]]);
            for (auto c : cands) {
                if (! fits(v, c))
                    continue;
                apply(v, c, +1);
                img[v] = c;
                if (run(i + 1))
                    return true;
                img[v] = -1;
                apply(v, c, -1);
            }
            return false;
        };

        if (! run(0))
            return std::nullopt;

        vector<bool> forward;
        for (auto [u, v] : g.edges())
            forward.push_back(hd.has_arc(img[u], img[v]));
        OrientedGraph gd(g, forward);
        VertexMap psi(hd.size(), img);
        if (! is_obh(gd, hd, psi))
            throw Error(ErrorKind::theorem_violation, "search produced a map that is not an OBH");
        return pair{ gd, psi };
    }

    auto star_to_obh(const Graph & g, const Colouring & f) -> pair<OrientedGraph, VertexMap>
    {
        auto d = g.regular_degree();
        if (! d || *d % 2 != 0 || *d < 4)
            throw Error(ErrorKind::precondition_violation, "graph is not 2p-regular with p >= 2");
        int p = *d / 2;
        if (f.size() != g.size())
            throw Error(ErrorKind::malformed_colouring, "colouring size does not match graph");
        for (Vertex v = 0 ; v < g.size() ; ++v)
            if (f[v] >= p + 2)
                throw Error(ErrorKind::precondition_violation, "colouring uses more than p+2 colours");
        Colouring f2(p + 2, f.assignment());
        if (! is_star_colouring(g, f2))
            throw Error(ErrorKind::precondition_violation, "colouring is not a star colouring");

        auto gd = induced_in_orientation(g, f2);
        auto h = in_colour_map(gd, f2);
        if (! h)
            throw Error(ErrorKind::theorem_violation, "in-neighbours of some vertex carry two colours");

        auto target = oriented_line_graph(complete_graph(p + 2));
        vector<Vertex> img;
        for (Vertex v = 0 ; v < g.size() ; ++v) {
            if (! (*h)[v])
                throw Error(ErrorKind::theorem_violation, "vertex " + std::to_string(v) + " has no in-neighbour");
            auto at = target.index_of({ *(*h)[v], f2[v] });
            if (! at)
                throw Error(ErrorKind::theorem_violation, "in-colour equals own colour at " + std::to_string(v));
            img.push_back(*at);
        }
        VertexMap psi(target.graph.size(), img);
        if (! is_obh(gd, target.graph, psi))
            throw Error(ErrorKind::theorem_violation, "constructed map is not an OBH");
        return { gd, psi };
    }

    auto obh_to_colouring(const OrientedGraph & gd, const VertexMap & psi, int p) -> Colouring
    {
        if (p < 1)
            throw Error(ErrorKind::invalid_parameter, "p must be positive");
        auto target = oriented_line_graph(complete_graph(p + 2));
        if (psi.target_size() != target.graph.size() || psi.source_size() != gd.size() || ! is_obh(gd, target.graph, psi))
            throw Error(ErrorKind::precondition_violation, "map is not an OBH onto the oriented line graph of K_{p+2}");
        vector<int> f;
        for (Vertex v = 0 ; v < gd.size() ; ++v)
            f.push_back(target.labels[psi[v]].second);
        Colouring result(p + 2, f);
        if (! is_mini(ColouredOrientation{ gd, result }))
            throw Error(ErrorKind::theorem_violation, "second projection is not MINI");
        return result;
    }

    auto compose_with_colouring(const VertexMap & psi, const Colouring & target_colouring) -> Colouring
    {
        if (psi.target_size() != target_colouring.size())
            throw Error(ErrorKind::malformed_map, "map target and colouring differ in size");
        vector<int> f;
        for (auto w : psi.images())
            f.push_back(target_colouring[w]);
        return Colouring(target_colouring.k(), f);
    }

    auto compose(const VertexMap & psi, const VertexMap & phi) -> VertexMap
    {
        if (psi.target_size() != phi.source_size())
            throw Error(ErrorKind::malformed_map, "maps do not chain");
        vector<Vertex> m;
        for (auto w : psi.images())
            m.push_back(phi[w]);
        return VertexMap(phi.target_size(), m);
    }

    auto lift_line(const Graph & g, const Graph & h, const VertexMap & psi) -> VertexMap
    {
        if (! is_lbh(g, h, psi))
            throw Error(ErrorKind::precondition_violation, "lifting to line graphs needs an LBH");
        auto lg = line_graph(g);
        auto lh = line_graph(h);
        std::map<Edge, Vertex> where;
        for (std::size_t i = 0 ; i < lh.labels.size() ; ++i)
            where.emplace(lh.labels[i], Vertex(i));
        vector<Vertex> m;
        for (auto [u, v] : lg.labels)
            m.push_back(where.at({ std::min(psi[u], psi[v]), std::max(psi[u], psi[v]) }));
        VertexMap result(lh.graph.size(), m);
        if (! is_lbh(lg.graph, lh.graph, result))
            throw Error(ErrorKind::theorem_violation, "lifted line map is not an LBH");
        return result;
    }

    auto lift_clique(const Graph & g, const Graph & h, const VertexMap & psi, int q) -> VertexMap
    {
        if (! is_lbh(g, h, psi))
            throw Error(ErrorKind::precondition_violation, "lifting to clique graphs needs an LBH");
        auto kg = clique_graph(g);
        auto kh = clique_graph(h);
        for (auto * k : { &kg, &kh })
            for (auto & c : k->labels)
                if (int(c.size()) != q)
                    throw Error(ErrorKind::precondition_violation, "a maximal clique has "
                            + std::to_string(c.size()) + " vertices, expected " + std::to_string(q));

        std::map<vector<Vertex>, Vertex> where;
        for (std::size_t i = 0 ; i < kh.labels.size() ; ++i)
            where.emplace(kh.labels[i], Vertex(i));
        vector<Vertex> m;
        for (auto & c : kg.labels) {
            vector<Vertex> image;
            for (auto v : c)
                image.push_back(psi[v]);
            std::sort(image.begin(), image.end());
            auto it = where.find(image);
            if (it == where.end())
                throw Error(ErrorKind::theorem_violation, "image of a maximal clique is not a maximal clique");
            m.push_back(it->second);
        }
        VertexMap result(kh.graph.size(), m);
        if (! is_lbh(kg.graph, kh.graph, result))
            throw Error(ErrorKind::theorem_violation, "lifted clique map is not an LBH");
        return result;
    }

    auto lstar_projection(const Graph & h) -> VertexMap
    {
        if (h.edge_count() == 0)
            throw Error(ErrorKind::invalid_input, "projection needs at least one edge");
        auto ls = lstar(h);
        auto lh = line_graph(h);
        std::map<Edge, Vertex> where;
        for (std::size_t i = 0 ; i < lh.labels.size() ; ++i)
            where.emplace(lh.labels[i], Vertex(i));
        vector<Vertex> m;
        for (auto [u, v] : ls.labels)
            m.push_back(where.at({ std::min(u, v), std::max(u, v) }));
        return VertexMap(lh.graph.size(), m);
    }

    auto promote_obh_to_lbh(const Graph & g, const OrientedGraph & gd, const VertexMap & psi, int p) -> VertexMap
    {
        if (p < 1)
            throw Error(ErrorKind::invalid_parameter, "p must be positive");
        if (! (shadow(gd) == g))
            throw Error(ErrorKind::precondition_violation, "orientation is not an orientation of the graph");
        if (g.regular_degree() != 2 * p)
            throw Error(ErrorKind::precondition_violation, "graph is not 2p-regular");
        if (find_induced_star(g, p + 1))
            throw Error(ErrorKind::precondition_violation, "graph contains an induced K_{1,p+1}");
        auto target = oriented_line_graph(complete_graph(p + 2));
        if (psi.target_size() != target.graph.size() || psi.source_size() != gd.size() || ! is_obh(gd, target.graph, psi))
            throw Error(ErrorKind::precondition_violation, "map is not an OBH onto the oriented line graph of K_{p+2}");
        if (! is_lbh(g, shadow(target.graph), psi))
            throw Error(ErrorKind::theorem_violation, "OBH from a K_{1,p+1}-free graph is not an LBH");
        return psi;
    }

    auto preimage_partition(const VertexMap & psi) -> PreimagePartition
    {
        PreimagePartition result;
        result.classes.resize(psi.target_size());
        for (Vertex v = 0 ; v < psi.source_size() ; ++v)
            result.classes[psi[v]].push_back(v);
        return result;
    }

    auto arc_2switch(const OrientedGraph & gd, Arc a1, Arc a2) -> OrientedGraph
    {
        auto [u, v] = a1;
        auto [x, y] = a2;
        std::set<Vertex> four{ u, v, x, y };
        for (auto z : four)
            if (z < 0 || z >= gd.size())
                throw Error(ErrorKind::invalid_switch, "vertex out of range");
        if (four.size() != 4)
            throw Error(ErrorKind::invalid_switch, "switch needs four distinct vertices");
        if (! gd.has_arc(u, v) || ! gd.has_arc(x, y))
            throw Error(ErrorKind::invalid_switch, "switched arcs must be present");
        vector<Vertex> quad(four.begin(), four.end());
        if (gd.induced(quad).arc_count() != 2)
            throw Error(ErrorKind::invalid_switch, "the four vertices carry arcs besides the two switched ones");

        vector<Arc> as;
        for (auto a : gd.arcs())
            if (a != a1 && a != a2)
                as.push_back(a);
        as.emplace_back(u, y);
        as.emplace_back(x, v);
        return OrientedGraph(gd.size(), as);
    }

    auto obh_is_isomorphism_check(const OrientedGraph & gd, const OrientedGraph & hd, const VertexMap & psi) -> bool
    {
        if (psi.source_size() != gd.size() || psi.target_size() != hd.size() || ! is_obh(gd, hd, psi))
            throw Error(ErrorKind::precondition_violation, "map is not an OBH");
        if (! is_strongly_connected(hd))
            throw Error(ErrorKind::precondition_violation, "target is not strongly connected");
        if (gd.size() != hd.size())
            return false;
        vector<char> hit(hd.size(), 0);
        for (auto w : psi.images()) {
            if (hit[w])
                throw Error(ErrorKind::theorem_violation, "OBH between equal-size graphs is not injective");
            hit[w] = 1;
        }
        if (gd.arc_count() != hd.arc_count())
            throw Error(ErrorKind::theorem_violation, "OBH between equal-size graphs changes the arc count");
        return true;
    }
}
