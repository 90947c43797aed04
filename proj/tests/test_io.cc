/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <starhom/constructions.hh>
#include <starhom/io.hh>
#include <starhom/isomorphism.hh>

#include <doctest.h>

#include <functional>
#include <sstream>
#include <string>

using namespace starhom;
using std::string;
using std::vector;

namespace
{
    auto parse_message(const std::function<void ()> & fn) -> string
    {
        try {
            fn();
        }
        catch (const Error & e) {
            if (e.kind() == ErrorKind::parse_error)
                return e.what();
            return "wrong kind";
        }
        return "no error";
    }
}

TEST_CASE("graph6 known strings")
{
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(to_graph6(complete_graph(1)) == "@");
    CHECK(to_graph6(Graph(0, {})) == "?");
    CHECK(from_graph6("C~") == complete_graph(4));
    CHECK(from_graph6(">>graph6<<C~") == complete_graph(4));
    CHECK(is_isomorphic(from_graph6("IheA@GUAo"), petersen()));
    CHECK(from_graph6("Bw") == complete_graph(3));
}

TEST_CASE("graph6 round trips")
{
    Random rng(101);
    for (int trial = 0 ; trial < 60 ; ++trial) {
        auto g = random_gnp(int(rng() % 70), 0.3, rng);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    auto big = line_graph(circular_ladder(40)).graph;
    CHECK(from_graph6(to_graph6(big)) == big);
}

TEST_CASE("graph6 errors")
{
    CHECK(parse_message([] { from_graph6(""); }) != "no error");
    CHECK(parse_message([] { from_graph6("C~~"); }) != "no error");
    CHECK(parse_message([] { from_graph6("C "); }) != "no error");
    CHECK(parse_message([] { from_graph6(":Fa@x^"); }) != "no error");
    CHECK(parse_message([] { from_graph6("C"); }) != "no error");
}

TEST_CASE("edge and arc list round trips")
{
    Random rng(103);
    for (int trial = 0 ; trial < 30 ; ++trial) {
        auto g = random_gnp(1 + int(rng() % 20), 0.3, rng);
        std::stringstream s;
        write_edge_list(s, g);
        CHECK(read_edge_list(s) == g);
        auto og = random_orientation(g, rng);
        std::stringstream a;
        write_arc_list(a, og);
        CHECK(read_arc_list(a) == og);
    }

    std::istringstream commented("# a triangle\n\n3 3\n0 1\n1 2 # edge\n2 0\n");
    CHECK(read_edge_list(commented) == complete_graph(3));
    std::istringstream g6("C~\n");
    CHECK(read_graph(g6) == complete_graph(4));
    std::istringstream el("2 1\n0 1\n");
    CHECK(read_graph(el) == complete_graph(2));
}

TEST_CASE("edge list errors carry line numbers")
{
    auto bad = [] (const string & text) {
        return parse_message([&] {
            std::istringstream in(text);
            read_edge_list(in);
        });
    };
    CHECK(bad("3 2\n0 1\n1 x\n").find("line 3") != string::npos);
    CHECK(bad("3 1\n0 5\n").find("line 2") != string::npos);
    CHECK(bad("3 1\n# c\n1 1\n").find("line 3") != string::npos);
    CHECK(bad("3 1\n0 1\n1 2\n").find("line 3") != string::npos);
    CHECK(bad("3 2\n0 1\n") != "no error");
    CHECK(bad("") != "no error");
    CHECK(bad("3 2\n0 1\n0 1\n") != "no error");

    auto bad_arcs = parse_message([] {
        std::istringstream in("2 2\n0 1\n1 0\n");
        read_arc_list(in);
    });
    CHECK(bad_arcs != "no error");
}

TEST_CASE("colourings and maps in text")
{
    Colouring f(4, { 0, 3, 1, 2 });
    std::stringstream s;
    write_colouring(s, f);
    CHECK(read_colouring(s, 4, 4) == f);

    std::istringstream implicit("0 0\n1 2\n");
    CHECK(read_colouring(implicit, 2).k() == 3);

    std::istringstream missing("0 0\n");
    CHECK(parse_message([&] { read_colouring(missing, 2); }) != "no error");

    VertexMap psi(3, { 2, 0, 1, 1 });
    std::stringstream m;
    write_vertex_map(m, psi);
    CHECK(read_vertex_map(m, 4, 3) == psi);
    std::istringstream arrows("0 -> 1\n1 -> 0\n");
    CHECK(read_vertex_map(arrows, 2, 2) == VertexMap(2, { 1, 0 }));
}

TEST_CASE("JSON certificates round trip")
{
    Colouring f(4, { 0, 3, 1, 2 });
    auto j = colouring_json(f, "star-colouring");
    CHECK(colouring_from_json(j, 4) == f);
    CHECK(colouring_from_json(Json::parse(j.dump()), 4) == f);

    MiniCertificate cert{ Colouring(3, { 0, 1, 2 }), { 2, 0, 1 } };
    CHECK(colouring_from_json(mini_json(cert), 3) == cert.f);

    VertexMap psi(3, { 2, 0, 1, 1 });
    auto mj = vertex_map_json(psi, "lbh", Json::object());
    CHECK(vertex_map_from_json(mj, 4, 3) == psi);

    auto pj = polynomial_json(IntPolynomial(vector<BigInt>{ -1, 0, 1 }));
    CHECK(pj["degree"] == 2);
    CHECK(pj["coeffs"] == Json::array({ "-1", "0", "1" }));

    CHECK(edges_json(complete_graph(2)) == Json{ { "n", 2 }, { "edges", Json::array({ Json::array({ 0, 1 }) }) } });
    auto aj = arcs_json(directed_cycle(3));
    CHECK(aj["n"] == 3);
    CHECK(aj["arcs"].size() == 3);
}
