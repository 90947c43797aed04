/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <starhom/cli.hh>
#include <starhom/budget.hh>
#include <starhom/colouring.hh>
#include <starhom/constructions.hh>
#include <starhom/homomorphism.hh>
#include <starhom/io.hh>
#include <starhom/orientation.hh>
#include <starhom/spectral.hh>
#include <starhom/structure.hh>
#include <starhom/verify.hh>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <variant>

using std::optional;
using std::string;
using std::vector;

namespace starhom::cli
{
    namespace
    {
        inline constexpr int exit_theorem_violation = 3;

        struct Options
        {
            string format;
            int k = 4, p = 2, q = 4, t = 4, r = 0, copies = 2;
            string base;
            std::uint64_t seed = 0;
            int jobs = 1;
            bool force = false;
            long timeout_ms = 0;
            string output;
        };

        using AnyGraph = std::variant<Graph, OrientedGraph>;

        auto default_jobs() -> int
        {
            if (auto e = std::getenv("STARHOM_JOBS")) {
                try {
                    return std::max(1, std::stoi(e));
                }
                catch (const std::exception &) {
                }
            }
            return 1;
        }

        auto need_graph(const AnyGraph & g, const string & what) -> Graph
        {
            if (auto p = std::get_if<Graph>(&g))
                return *p;
            throw Error(ErrorKind::invalid_parameter, what + " needs an undirected base graph");
        }

        auto build(const string & family, const Options & o, int depth = 0) -> AnyGraph
        {
            auto base = [&] () -> Graph {
                if (o.base.empty())
                    throw Error(ErrorKind::invalid_parameter, "family '" + family + "' needs --base");
                if (std::filesystem::exists(o.base))
                    return read_graph_file(o.base);
                if (depth > 0)
                    throw Error(ErrorKind::invalid_parameter, "--base cannot itself need a base");
                return need_graph(build(o.base, o, depth + 1), family);
            };

            if (family == "complete")
                return complete_graph(o.q);
            if (family == "cube")
                return cube_q3();
            if (family == "circular-ladder")
                return circular_ladder(o.t);
            if (family == "friendship")
                return friendship(o.p, o.r);
            if (family == "petersen")
                return petersen();
            if (family == "octahedron")
                return octahedron();
            if (family == "diamond")
                return diamond();
            if (family == "paw")
                return paw();
            if (family == "cycle")
                return cycle_graph(o.q);
            if (family == "path")
                return path_graph(o.q);
            if (family == "star")
                return star_graph(o.p);
            if (family == "complete-bipartite")
                return complete_bipartite(o.p, o.q);
            if (family == "antiprism")
                return antiprism(o.t);
            if (family == "directed-cycle")
                return directed_cycle(o.q);
            if (family == "line")
                return line_graph(base()).graph;
            if (family == "clique")
                return clique_graph(base()).graph;
            if (family == "oriented-line")
                return oriented_line_graph(base()).graph;
            if (family == "lstar")
                return lstar(base()).graph;
            if (family == "bipartite-double")
                return bipartite_double(base()).graph;
            if (family == "union")
                return disjoint_union(base(), o.copies);
            if (family == "random-regular") {
                Random rng(o.seed);
                return random_regular(o.q, o.k, rng);
            }
            throw Error(ErrorKind::invalid_parameter, "unknown family '" + family + "'");
        }

        auto write_any(std::ostream & out, const AnyGraph & g, const string & format) -> void
        {
            if (auto og = std::get_if<OrientedGraph>(&g)) {
                if (format.empty() || format == "arclist")
                    write_arc_list(out, *og);
                else if (format == "json")
                    out << arcs_json(*og).dump() << '\n';
                else
                    throw Error(ErrorKind::invalid_parameter, "orientations are written as arclist or json");
                return;
            }
            auto & ug = std::get<Graph>(g);
            if (format.empty() || format == "graph6")
                out << to_graph6(ug) << '\n';
            else if (format == "edgelist")
                write_edge_list(out, ug);
            else if (format == "json")
                out << edges_json(ug).dump() << '\n';
            else
                throw Error(ErrorKind::invalid_parameter, "graphs are written as graph6, edgelist or json");
        }

        /**
         * Witness output goes to --output when given, else to out.
         */
        class Sink
        {
            private:
                std::unique_ptr<std::ofstream> _file;
                std::ostream * _stream;

            public:
                Sink(const string & path, std::ostream & out) :
                    _stream(&out)
                {
                    if (! path.empty()) {
                        _file = std::make_unique<std::ofstream>(path);
                        if (! *_file)
                            throw Error(ErrorKind::invalid_parameter, "cannot write '" + path + "'");
                        _stream = _file.get();
                    }
                }

                auto operator* () -> std::ostream & { return *_stream; }
        };

        auto emit_colouring(const Options & o, std::ostream & out, const Colouring & f, const string & kind) -> void
        {
            Sink sink(o.output, out);
            if (o.format == "json")
                *sink << colouring_json(f, kind).dump() << '\n';
            else
                write_colouring(*sink, f);
        }

        auto emit_map(const Options & o, std::ostream & out, const VertexMap & psi, const string & kind, const Json & checks) -> void
        {
            Sink sink(o.output, out);
            if (o.format == "json")
                *sink << vertex_map_json(psi, kind, checks).dump() << '\n';
            else
                write_vertex_map(*sink, psi);
        }

        auto verdict(std::ostream & out, bool ok, const string & yes, const string & no) -> int
        {
            out << (ok ? yes : no) << '\n';
            return ok ? exit_found : exit_absent;
        }

        auto predicate(const string & name, const Graph & g, const Options & o, const Guards & guards)
            -> std::pair<Json, Json>
        {
            auto seq = [] (const optional<vector<Vertex>> & w) { return w ? Json(*w) : Json(nullptr); };
            if (name == "claw-free") {
                auto w = find_induced_star(g, 3);
                return { ! w, seq(w) };
            }
            if (name == "star-free") {
                auto w = find_induced_star(g, o.p + 1);
                return { ! w, seq(w) };
            }
            if (name == "diamond-free") {
                auto w = find_induced_diamond(g);
                return { ! w, seq(w) };
            }
            if (name == "k4-free") {
                auto w = find_k4(g);
                return { ! w, seq(w) };
            }
            if (name == "locally-linear")
                return { is_locally_linear(g), nullptr };
            if (name == "in-f")
                return { in_family_f(g, o.q, o.r), nullptr };
            if (name == "odd-hole-free") {
                auto w = find_odd_hole(g, guards);
                return { ! w, seq(w) };
            }
            if (name == "hamiltonian") {
                auto w = find_hamiltonian_cycle(g, guards);
                return { w.has_value(), seq(w) };
            }
            if (name == "independence-number")
                return { independence_number(g, guards), nullptr };
            if (name == "bipartite")
                return { g.is_bipartite(), nullptr };
            if (name == "connected")
                return { g.is_connected(), nullptr };
            if (name == "regular") {
                auto d = g.regular_degree();
                return { d.has_value(), d ? Json(*d) : Json(nullptr) };
            }
            throw Error(ErrorKind::invalid_parameter, "unknown predicate '" + name + "'");
        }
    }

    auto run(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{ "starhom: star colourings, MINI-orientations and locally constrained homomorphisms" };
        app.require_subcommand(1);
        app.fallthrough();

        Options o;
        o.jobs = default_jobs();
        app.add_option("--format", o.format, "graph6, edgelist, arclist or json")
            ->check(CLI::IsMember({ "graph6", "edgelist", "arclist", "json" }));
        app.add_option("--k", o.k, "number of colours");
        app.add_option("--p", o.p, "half the degree, or a star size");
        app.add_option("--q", o.q, "clique or cycle size");
        app.add_option("--t", o.t, "ladder or antiprism length");
        app.add_option("--r", o.r, "removed edges, or the r of F(q,r)");
        app.add_option("--copies", o.copies, "copies for union");
        app.add_option("--base", o.base, "base family or graph file");
        app.add_option("--seed", o.seed, "seed for random families");
        app.add_option("--jobs", o.jobs, "worker threads (default STARHOM_JOBS or 1)")->check(CLI::PositiveNumber);
        app.add_flag("--force", o.force, "lift the size guards");
        app.add_option("--timeout", o.timeout_ms, "wall-clock limit in milliseconds");
        app.add_option("--output,-o", o.output, "write the witness here");

        std::function<int ()> action;
        string a1, a2, a3;

        auto gen = app.add_subcommand("gen", "write a named graph or construction");
        gen->add_option("family", a1, "family name")->required();
        gen->callback([&] { action = [&] {
            write_any(out, build(a1, o), o.format);
            return exit_found;
        }; });

        auto verify = app.add_subcommand("verify", "run a theorem recipe");
        verify->add_option("theorem_id", a1)->required();
        verify->callback([&] { action = [&] {
            VerifyOptions vo;
            vo.seed = o.seed;
            vo.jobs = o.jobs;
            if (o.force)
                vo.guards = Guards::none();
            auto report = run_recipe(a1, vo);
            if (o.format == "json")
                out << report_json(report).dump(2) << '\n';
            else {
                for (auto & i : report.instances)
                    out << (i.passed ? "PASS " : "FAIL ") << i.descriptor << '\n';
                out << report.theorem_id << ": " << (report.passed ? "passed" : "FAILED") << " ("
                    << report.instances.size() << " instances, " << report.elapsed.count() << " ms)\n";
            }
            return report.passed ? exit_found : exit_absent;
        }; });

        auto list = app.add_subcommand("list", "list theorem ids");
        list->callback([&] { action = [&] {
            for (auto & id : recipe_ids())
                out << id << '\n';
            return exit_found;
        }; });

        auto solve_star_cmd = app.add_subcommand("solve-star", "find a k-star colouring");
        solve_star_cmd->add_option("graph", a1)->required();
        solve_star_cmd->callback([&] { action = [&] {
            auto g = read_graph_file(a1);
            if (auto f = solve_star(g, o.k)) {
                emit_colouring(o, out, *f, "star");
                return exit_found;
            }
            out << "no " << o.k << "-star colouring\n";
            return exit_absent;
        }; });

        auto solve_d2 = app.add_subcommand("solve-distance-two", "find a distance-two k-colouring");
        solve_d2->add_option("graph", a1)->required();
        solve_d2->callback([&] { action = [&] {
            auto g = read_graph_file(a1);
            if (auto f = solve_distance_two(g, o.k)) {
                emit_colouring(o, out, *f, "distance-two");
                return exit_found;
            }
            out << "no distance-two " << o.k << "-colouring\n";
            return exit_absent;
        }; });

        auto find_mini = app.add_subcommand("find-mini", "find a k-coloured MINI-orientation of a graph");
        find_mini->add_option("graph", a1)->required();
        find_mini->callback([&] { action = [&] {
            auto g = read_graph_file(a1);
            auto co = find_mini_orientation(g, o.k);
            if (! co) {
                out << "no " << o.k << "-coloured MINI-orientation\n";
                return exit_absent;
            }
            Sink sink(o.output, out);
            if (o.format == "json")
                *sink << Json{ { "n", g.size() }, { "arcs", arcs_json(co->orientation)["arcs"] },
                    { "colouring", colouring_json(co->colouring, "mini") } }.dump() << '\n';
            else {
                write_arc_list(*sink, co->orientation);
                *sink << "# colouring\n";
                for (Vertex v = 0 ; v < g.size() ; ++v)
                    *sink << "# " << v << ' ' << co->colouring[v] << '\n';
            }
            return exit_found;
        }; });

        auto check_star = app.add_subcommand("check-star", "check a star colouring");
        check_star->add_option("graph", a1)->required();
        check_star->add_option("colouring", a2)->required();
        check_star->callback([&] { action = [&] {
            auto g = read_graph_file(a1);
            auto f = read_colouring_file(a2, g.size());
            return verdict(out, is_star_colouring(g, f), "star colouring", "not a star colouring");
        }; });

        auto check_d2 = app.add_subcommand("check-distance-two", "check a distance-two colouring");
        check_d2->add_option("graph", a1)->required();
        check_d2->add_option("colouring", a2)->required();
        check_d2->callback([&] { action = [&] {
            auto g = read_graph_file(a1);
            auto f = read_colouring_file(a2, g.size());
            return verdict(out, is_distance_two(g, f), "distance-two colouring", "not a distance-two colouring");
        }; });

        auto check_mini = app.add_subcommand("check-mini", "check or recognise a MINI-orientation");
        check_mini->add_option("orientation", a1)->required();
        check_mini->add_option("colouring", a2);
        check_mini->callback([&] { action = [&] {
            auto og = read_orientation_file(a1);
            if (! a2.empty()) {
                auto f = read_colouring_file(a2, og.size());
                return verdict(out, is_mini(ColouredOrientation(og, f)), "MINI-orientation", "not a MINI-orientation");
            }
            auto cert = recognize_mini(og);
            if (! cert) {
                out << "no certificate\n";
                return exit_absent;
            }
            Sink sink(o.output, out);
            if (o.format == "json")
                *sink << mini_json(*cert).dump() << '\n';
            else
                write_colouring(*sink, cert->f);
            return exit_found;
        }; });

        auto check_lbh = app.add_subcommand("check-lbh", "check a locally bijective homomorphism");
        check_lbh->add_option("graph", a1)->required();
        check_lbh->add_option("target", a2)->required();
        check_lbh->add_option("map", a3)->required();
        check_lbh->callback([&] { action = [&] {
            auto g = read_graph_file(a1), h = read_graph_file(a2);
            auto psi = read_vertex_map_file(a3, g.size(), h.size());
            return verdict(out, is_lbh(g, h, psi), "LBH", "not an LBH");
        }; });

        auto check_obh = app.add_subcommand("check-obh", "check an out-neighbourhood bijective homomorphism");
        check_obh->add_option("orientation", a1)->required();
        check_obh->add_option("target", a2)->required();
        check_obh->add_option("map", a3)->required();
        check_obh->callback([&] { action = [&] {
            auto gd = read_orientation_file(a1), hd = read_orientation_file(a2);
            auto psi = read_vertex_map_file(a3, gd.size(), hd.size());
            return verdict(out, is_obh(gd, hd, psi), "OBH", "not an OBH");
        }; });

        auto find_lbh_cmd = app.add_subcommand("find-lbh", "search for a locally bijective homomorphism");
        find_lbh_cmd->add_option("graph", a1)->required();
        find_lbh_cmd->add_option("target", a2)->required();
        find_lbh_cmd->callback([&] { action = [&] {
            auto g = read_graph_file(a1), h = read_graph_file(a2);
            if (auto psi = find_lbh(g, h)) {
                emit_map(o, out, *psi, "lbh", Json{ { "is_lbh", is_lbh(g, h, *psi) } });
                return exit_found;
            }
            out << "no LBH\n";
            return exit_absent;
        }; });

        auto find_obh_cmd = app.add_subcommand("find-obh",
                "search for an OBH between orientations, or from some orientation of a graph to the oriented line graph of K_{p+2}");
        find_obh_cmd->add_option("source", a1)->required();
        find_obh_cmd->add_option("target", a2);
        find_obh_cmd->callback([&] { action = [&] {
            if (a2.empty()) {
                auto g = read_graph_file(a1);
                auto target = oriented_line_graph(complete_graph(o.p + 2));
                auto found = find_orientation_obh(g, target.graph);
                if (! found) {
                    out << "no orientation with an OBH\n";
                    return exit_absent;
                }
                Sink sink(o.output, out);
                auto & [gd, psi] = *found;
                if (o.format == "json")
                    *sink << Json{ { "n", gd.size() }, { "arcs", arcs_json(gd)["arcs"] },
                        { "map", vertex_map_json(psi, "obh", Json{ { "is_obh", is_obh(gd, target.graph, psi) } }) } }.dump() << '\n';
                else {
                    write_arc_list(*sink, gd);
                    *sink << "# map\n";
                    for (Vertex v = 0 ; v < gd.size() ; ++v)
                        *sink << "# " << v << " -> " << psi[v] << '\n';
                }
                return exit_found;
            }
            auto gd = read_orientation_file(a1), hd = read_orientation_file(a2);
            if (auto psi = find_obh(gd, hd)) {
                emit_map(o, out, *psi, "obh", Json{ { "is_obh", is_obh(gd, hd, *psi) } });
                return exit_found;
            }
            out << "no OBH\n";
            return exit_absent;
        }; });

        auto sweep = app.add_subcommand("sweep", "run recognize_mini on every orientation of a graph");
        sweep->add_option("graph", a1)->required();
        sweep->callback([&] { action = [&] {
            auto g = read_graph_file(a1);
            auto s = sweep_orientations(g, o.jobs, o.force ? 63 : OrientationEnumerator::default_edge_limit);
            Json j{ { "orientations", s.total }, { "mini", s.mini_count }, { "filter_passes", s.filter_passes },
                { "brute_force_confirmed", s.brute_force_confirmed }, { "filter_misses", s.filter_misses },
                { "witness", s.first_witness ? arcs_json(*s.first_witness) : Json(nullptr) } };
            if (o.format == "json")
                out << j.dump() << '\n';
            else
                out << s.total << " orientations, " << s.mini_count << " MINI\n";
            return s.mini_count > 0 ? exit_found : exit_absent;
        }; });

        auto charpoly = app.add_subcommand("charpoly", "characteristic polynomial, ascending coefficients");
        charpoly->add_option("graph", a1)->required();
        charpoly->callback([&] { action = [&] {
            auto poly = char_poly(read_graph_file(a1));
            if (o.format == "json")
                out << polynomial_json(poly).dump() << '\n';
            else
                out << poly.to_string() << '\n';
            return exit_found;
        }; });

        auto pred = app.add_subcommand("predicate", "evaluate a structural predicate");
        pred->add_option("name", a1, "claw-free, star-free, diamond-free, k4-free, locally-linear, in-f, "
                "odd-hole-free, hamiltonian, independence-number, bipartite, connected, regular")->required();
        pred->add_option("graph", a2)->required();
        pred->callback([&] { action = [&] {
            auto g = read_graph_file(a2);
            auto [value, witness] = predicate(a1, g, o, o.force ? Guards::none() : Guards{});
            if (o.format == "json")
                out << Json{ { "graph_id", a2 }, { "predicate", a1 }, { "value", value }, { "witness", witness } }.dump() << '\n';
            else
                out << a1 << ": " << value.dump() << '\n';
            if (value.is_boolean())
                return value.get<bool>() ? exit_found : exit_absent;
            return exit_found;
        }; });

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? exit_found : exit_usage;
        }

        try {
            optional<ScopedDeadline> deadline;
            if (o.timeout_ms > 0)
                deadline.emplace(std::chrono::milliseconds(o.timeout_ms));
            return action();
        }
        catch (const Error & e) {
            err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
            return e.kind() == ErrorKind::theorem_violation ? exit_theorem_violation : exit_usage;
        }
    }
}
