/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STARHOM_GUARD_VERIFY_HH
#define STARHOM_GUARD_VERIFY_HH 1

#include <starhom/graph.hh>
#include <starhom/homomorphism.hh>
#include <starhom/io.hh>
#include <starhom/orientation.hh>
#include <starhom/structure.hh>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace starhom
{
    struct InstanceResult
    {
        std::string descriptor;
        Json expected;
        Json observed;
        Json witness;
        bool passed = false;
    };

    struct VerificationReport
    {
        std::string theorem_id;
        std::uint64_t seed = 0;
        std::vector<InstanceResult> instances;
        bool passed = false;
        std::chrono::milliseconds elapsed{ 0 };
    };

    struct VerifyOptions
    {
        std::uint64_t seed = 0;
        int jobs = 1;
        Guards guards;
    };

    struct NamedGraph
    {
        std::string name;
        Graph graph;
    };

    auto recipe_ids() -> std::vector<std::string>;

    // unknown ids are invalid_parameter
    auto run_recipe(const std::string & id, const VerifyOptions & = {}) -> VerificationReport;

    auto report_json(const VerificationReport &) -> Json;

    // runs body(0..count-1) on up to jobs threads; the first exception is rethrown
    auto parallel_for(std::size_t count, int jobs, const std::function<void (std::size_t)> & body) -> void;

    // L*(K4), octahedron, K5, L(CL8), the 8-vertex antiprism and 20 random
    // connected 4-regular graphs on at most 12 vertices
    auto four_regular_family(std::uint64_t seed) -> std::vector<NamedGraph>;

    // K4, K33, Q3, Petersen, CL3, CL4, CL5, CL6, CL8
    auto cubic_family() -> std::vector<NamedGraph>;

    // random connected 4-regular graphs on 5..max_n vertices
    auto random_four_regular(int count, int max_n, std::uint64_t seed) -> std::vector<NamedGraph>;

    struct SwitchedCover
    {
        OrientedGraph orientation;
        VertexMap psi;
        int switches = 0;
    };

    // copies of the oriented line graph of K_{p+2} with random arc 2-switches on arcs
    // whose heads share an image; psi stays an OBH onto one copy
    auto switched_cover(int p, int copies, int switches, std::uint64_t seed) -> SwitchedCover;

    struct EquivalenceRoutes
    {
        bool star = false;
        bool mini = false;
        bool obh = false;
        bool components = false;
        std::string mini_route;
        std::optional<Colouring> star_witness;
    };

    // the four decision procedures for (p+2)-star colourability of a 2p-regular graph
    auto equivalence_routes(const Graph &, int p) -> EquivalenceRoutes;

    // a colouring that makes og MINI, by trying every set partition of the vertices
    auto brute_force_mini(const OrientedGraph &) -> std::optional<Colouring>;

    struct SweepResult
    {
        std::uint64_t total = 0;
        std::uint64_t mini_count = 0;
        std::uint64_t filter_passes = 0;
        std::uint64_t brute_force_confirmed = 0;
        // MINI orientations rejected by mini_local_filter
        std::uint64_t filter_misses = 0;
        std::optional<OrientedGraph> first_witness;
    };

    // every orientation through recognize_mini; filter-passing failures are re-checked by brute force
    auto sweep_orientations(const Graph &, int jobs = 1, std::size_t edge_limit = OrientationEnumerator::default_edge_limit) -> SweepResult;
}

#endif
