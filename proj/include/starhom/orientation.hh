/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STARHOM_GUARD_ORIENTATION_HH
#define STARHOM_GUARD_ORIENTATION_HH 1

#include <starhom/colouring.hh>
#include <starhom/graph.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace starhom
{
    struct ColouredOrientation
    {
        OrientedGraph orientation;
        Colouring colouring;

        // throws malformed_colouring when the sizes differ
        ColouredOrientation(OrientedGraph o, Colouring f);
    };

    struct MiniCertificate
    {
        Colouring f;

        // colour shared by the in-neighbours; nullopt at sources
        std::vector<std::optional<int>> h;

        auto k() const -> int { return f.k(); }
    };

    // bicoloured 3-vertex paths point at their middle; other edges go low to high
    auto induced_in_orientation(const Graph &, const Colouring &) -> OrientedGraph;

    auto is_coloured_in_orientation(const ColouredOrientation &) -> bool;
    auto is_mini(const ColouredOrientation &) -> bool;

    // h from f, or nullopt if in-neighbours disagree somewhere
    auto in_colour_map(const OrientedGraph &, const Colouring &) -> std::optional<std::vector<std::optional<int>>>;

    // classes of the closure of "shares an out-neighbour", numbered by smallest member
    auto shared_out_classes(const OrientedGraph &) -> std::vector<int>;

    auto recognize_mini(const OrientedGraph &) -> std::optional<MiniCertificate>;

    // some MINI colouring of og with at most k colours
    auto mini_colouring_with(const OrientedGraph &, int k) -> std::optional<Colouring>;

    // triangles directed, 4-cycles of the two allowed shapes
    auto mini_local_filter(const OrientedGraph &) -> bool;

    auto is_eulerian(const OrientedGraph &) -> bool;
    auto is_strongly_connected(const OrientedGraph &) -> bool;

    /**
     * All 2^|E| orientations of a graph, one direction flag flipped per step.
     */
    class OrientationEnumerator
    {
        private:
            Graph _g;
            std::vector<bool> _forward;
            std::uint64_t _step = 0, _total = 0;
            std::uint64_t _first = 0, _last = 0;

        public:
            static constexpr std::size_t default_edge_limit = 24;

            // throws budget_exceeded when |E| > edge_limit
            explicit OrientationEnumerator(const Graph &, std::size_t edge_limit = default_edge_limit);

            auto total() const -> std::uint64_t { return _total; }

            // restrict to Gray-code positions [first, last)
            auto restrict_to(std::uint64_t first, std::uint64_t last) -> void;

            auto next() -> std::optional<OrientedGraph>;
    };

    // a k-coloured MINI orientation of g, found by a pruned search over orientations
    auto find_mini_orientation(const Graph &, int k) -> std::optional<ColouredOrientation>;
}

#endif
