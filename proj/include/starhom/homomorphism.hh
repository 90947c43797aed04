/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STARHOM_GUARD_HOMOMORPHISM_HH
#define STARHOM_GUARD_HOMOMORPHISM_HH 1

#include <starhom/colouring.hh>
#include <starhom/graph.hh>

#include <optional>
#include <utility>
#include <vector>

namespace starhom
{
    class VertexMap
    {
        private:
            int _source_size = 0, _target_size = 0;
            std::vector<Vertex> _map;

        public:
            VertexMap() = default;

            // throws malformed_map if an image is out of range
            VertexMap(int target_size, std::vector<Vertex> images);

            static auto identity(int n) -> VertexMap;

            auto source_size() const -> int { return _source_size; }
            auto target_size() const -> int { return _target_size; }
            auto operator[] (Vertex v) const -> Vertex { return _map[v]; }
            auto images() const -> const std::vector<Vertex> & { return _map; }

            auto operator== (const VertexMap &) const -> bool = default;
    };

    struct PreimagePartition
    {
        // classes[w] is the sorted preimage of w
        std::vector<std::vector<Vertex>> classes;

        auto equal_sizes() const -> bool;
    };

    auto is_homomorphism(const Graph & g, const Graph & h, const VertexMap &) -> bool;
    auto is_locally_injective(const Graph & g, const Graph & h, const VertexMap &) -> bool;
    auto is_lbh(const Graph & g, const Graph & h, const VertexMap &) -> bool;

    auto is_oriented_homomorphism(const OrientedGraph & gd, const OrientedGraph & hd, const VertexMap &) -> bool;
    auto is_out_injective(const OrientedGraph & gd, const OrientedGraph & hd, const VertexMap &) -> bool;
    auto is_obh(const OrientedGraph & gd, const OrientedGraph & hd, const VertexMap &) -> bool;
    auto is_degree_preserving(const Graph & g, const Graph & h, const VertexMap &) -> bool;

    auto find_lbh(const Graph & g, const Graph & h) -> std::optional<VertexMap>;
    auto find_obh(const OrientedGraph & gd, const OrientedGraph & hd, bool degree_preserving = false) -> std::optional<VertexMap>;

    // searches maps of an unoriented g onto hd; the orientation of g is the one pulled back
    auto find_orientation_obh(const Graph & g, const OrientedGraph & hd)
        -> std::optional<std::pair<OrientedGraph, VertexMap>>;

    // the in-orientation of a (p+2)-star colouring of a 2p-regular graph, with
    // v mapped to the pair (in-colour, colour) of the oriented line graph of K_{p+2}
    auto star_to_obh(const Graph & g, const Colouring & f) -> std::pair<OrientedGraph, VertexMap>;

    // second coordinate of an OBH into the oriented line graph of K_{p+2}
    auto obh_to_colouring(const OrientedGraph & gd, const VertexMap & psi, int p) -> Colouring;

    auto compose_with_colouring(const VertexMap & psi, const Colouring & target_colouring) -> Colouring;

    // phi after psi
    auto compose(const VertexMap & psi, const VertexMap & phi) -> VertexMap;

    auto lift_line(const Graph & g, const Graph & h, const VertexMap & psi) -> VertexMap;
    auto lift_clique(const Graph & g, const Graph & h, const VertexMap & psi, int q) -> VertexMap;

    // from L*(h) onto L(h), forgetting the order of each pair
    auto lstar_projection(const Graph & h) -> VertexMap;

    auto promote_obh_to_lbh(const Graph & g, const OrientedGraph & gd, const VertexMap & psi, int p) -> VertexMap;

    auto preimage_partition(const VertexMap & psi) -> PreimagePartition;

    // removes (u,v) and (x,y), adds (u,y) and (x,v)
    auto arc_2switch(const OrientedGraph & gd, Arc a1, Arc a2) -> OrientedGraph;

    auto obh_is_isomorphism_check(const OrientedGraph & gd, const OrientedGraph & hd, const VertexMap & psi) -> bool;
}

#endif
