/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STARHOM_GUARD_ISOMORPHISM_HH
#define STARHOM_GUARD_ISOMORPHISM_HH 1

#include <starhom/graph.hh>

#include <optional>
#include <vector>

namespace starhom
{
    struct IsoWitness
    {
        // mapping[v] is the image of v in the second graph
        std::vector<Vertex> mapping;
    };

    auto is_isomorphic(const Graph & g, const Graph & h) -> std::optional<IsoWitness>;

    auto verify_isomorphism(const Graph & g, const Graph & h, const std::vector<Vertex> & mapping) -> bool;
}

#endif
