/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STARHOM_GUARD_STRUCTURE_HH
#define STARHOM_GUARD_STRUCTURE_HH 1

#include <starhom/graph.hh>

#include <optional>
#include <vector>

namespace starhom
{
    struct Guards
    {
        int induced_pattern = 6;
        int subgraph_pattern = 12;
        int odd_hole = 32;
        int independence = 40;
        int hamiltonian = 24;

        static auto none() -> Guards;
    };

    // an induced copy of pattern, as pattern vertex -> g vertex
    auto find_induced(const Graph & g, const Graph & pattern, const Guards & = {}) -> std::optional<std::vector<Vertex>>;
    auto is_induced_free(const Graph & g, const Graph & pattern, const Guards & = {}) -> bool;

    // fast paths; witnesses list the pattern's vertices in g
    auto find_induced_star(const Graph & g, int p) -> std::optional<std::vector<Vertex>>;
    auto find_induced_diamond(const Graph & g) -> std::optional<std::vector<Vertex>>;
    auto find_k4(const Graph & g) -> std::optional<std::vector<Vertex>>;

    auto find_subgraph(const Graph & g, const Graph & pattern, const Guards & = {}) -> std::optional<std::vector<Vertex>>;
    auto contains_subgraph(const Graph & g, const Graph & pattern, const Guards & = {}) -> bool;

    auto is_locally_linear(const Graph & g) -> bool;
    auto in_family_f(const Graph & g, int q, int r) -> bool;

    auto find_odd_hole(const Graph & g, const Guards & = {}) -> std::optional<std::vector<Vertex>>;
    auto is_odd_hole_free(const Graph & g, const Guards & = {}) -> bool;

    auto independence_number(const Graph & g, const Guards & = {}) -> int;
    auto find_hamiltonian_cycle(const Graph & g, const Guards & = {}) -> std::optional<std::vector<Vertex>>;
}

#endif
