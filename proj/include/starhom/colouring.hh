/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STARHOM_GUARD_COLOURING_HH
#define STARHOM_GUARD_COLOURING_HH 1

#include <starhom/graph.hh>

#include <optional>
#include <vector>

namespace starhom
{
    /**
     * A total map from vertices to 0..k-1. The k is a capacity, not every
     * colour has to be used.
     */
    class Colouring
    {
        private:
            int _k = 0;
            std::vector<int> _colour;

        public:
            Colouring() = default;

            // throws malformed_colouring on an out-of-range colour
            Colouring(int k, std::vector<int> assignment);

            auto k() const -> int { return _k; }
            auto size() const -> int { return int(_colour.size()); }
            auto operator[] (Vertex v) const -> int { return _colour[v]; }
            auto assignment() const -> const std::vector<int> & { return _colour; }
            auto used_colours() const -> int;

            auto operator== (const Colouring &) const -> bool = default;
    };

    enum class ComponentShape
    {
        k1,
        star,
        non_star
    };

    struct BicolouredComponent
    {
        std::vector<Vertex> vertices;
        std::pair<int, int> colours;
        ComponentShape shape;

        // for stars only; K_2 takes its lower vertex as centre
        Vertex centre = -1;
        int leaves = 0;
    };

    auto is_proper(const Graph &, const Colouring &) -> bool;

    auto bicoloured_components(const Graph &, const Colouring &) -> std::vector<BicolouredComponent>;

    auto is_star_colouring(const Graph &, const Colouring &) -> bool;
    auto is_distance_two(const Graph &, const Colouring &) -> bool;
    auto all_components_are_k1p(const Graph &, const Colouring &, int p) -> bool;

    auto solve_star(const Graph &, int k) -> std::optional<Colouring>;
    auto solve_distance_two(const Graph &, int k) -> std::optional<Colouring>;

    // a k-colouring all of whose bicoloured components are K_{1,p}; every
    // assignment is tried when n <= exhaustive_limit, else a pruned search
    auto solve_all_components_k1p(const Graph &, int k, int p, int exhaustive_limit = 10) -> std::optional<Colouring>;

    auto regular_lower_bound(int d) -> int;
}

#endif
