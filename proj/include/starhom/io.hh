/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STARHOM_GUARD_IO_HH
#define STARHOM_GUARD_IO_HH 1

#include <starhom/colouring.hh>
#include <starhom/graph.hh>
#include <starhom/homomorphism.hh>
#include <starhom/orientation.hh>
#include <starhom/spectral.hh>

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace starhom
{
    using Json = nlohmann::json;

    auto to_graph6(const Graph &) -> std::string;

    // accepts an optional >>graph6<< header; errors are parse_error
    auto from_graph6(std::string_view) -> Graph;

    // "n m" then m lines "u v"; blank lines and # comments are skipped
    auto write_edge_list(std::ostream &, const Graph &) -> void;
    auto read_edge_list(std::istream &) -> Graph;
    auto write_arc_list(std::ostream &, const OrientedGraph &) -> void;
    auto read_arc_list(std::istream &) -> OrientedGraph;

    // graph6 or edge list, decided by the first meaningful line
    auto read_graph(std::istream &) -> Graph;
    auto read_graph_file(const std::string & path) -> Graph;
    auto read_orientation_file(const std::string & path) -> OrientedGraph;

    // n lines "v c"; k defaults to one more than the largest colour
    auto write_colouring(std::ostream &, const Colouring &) -> void;
    auto read_colouring(std::istream &, int n, std::optional<int> k = std::nullopt) -> Colouring;

    // text or a JSON certificate
    auto read_colouring_file(const std::string & path, int n) -> Colouring;

    // n lines "v → w"; "->" is accepted on input
    auto write_vertex_map(std::ostream &, const VertexMap &) -> void;
    auto read_vertex_map(std::istream &, int source_size, int target_size) -> VertexMap;
    auto read_vertex_map_file(const std::string & path, int source_size, int target_size) -> VertexMap;

    auto colouring_json(const Colouring &, std::string_view witness_kind) -> Json;
    // reads "assignment", or "f" from a MINI certificate
    auto colouring_from_json(const Json &, int n) -> Colouring;
    auto mini_json(const MiniCertificate &) -> Json;
    auto vertex_map_json(const VertexMap &, std::string_view kind, const Json & checks) -> Json;
    auto vertex_map_from_json(const Json &, int source_size, int target_size) -> VertexMap;
    auto polynomial_json(const IntPolynomial &) -> Json;
    auto edges_json(const Graph &) -> Json;
    auto arcs_json(const OrientedGraph &) -> Json;
}

#endif
