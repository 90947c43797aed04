/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <starhom/io.hh>

#include <algorithm>
#include <fstream>
#include <sstream>

using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace starhom
{
    namespace
    {
        auto parse_fail(int line, const string & what) -> Error
        {
            return Error(ErrorKind::parse_error, "line " + std::to_string(line) + ": " + what);
        }

        auto trim(string_view s) -> string_view
        {
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.remove_prefix(1);
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.remove_suffix(1);
            return s;
        }

        // meaningful lines with their 1-based numbers
        struct Lines
        {
            std::istream & in;
            int number = 0;

            auto next(string & out) -> bool
            {
                string raw;
                while (std::getline(in, raw)) {
                    ++number;
                    auto hash = raw.find('#');
                    if (hash != string::npos)
                        raw.erase(hash);
                    auto t = trim(raw);
                    if (! t.empty()) {
                        out = string(t);
                        return true;
                    }
                }
                return false;
            }
        };

        auto parse_ints(const string & s, int line, std::size_t count) -> vector<long>
        {
            std::istringstream ss(s);
            vector<long> r;
            string tok;
            while (ss >> tok) {
                std::size_t used = 0;
                long v = 0;
                try {
                    v = std::stol(tok, &used);
                }
                catch (const std::exception &) {
                    throw parse_fail(line, "expected an integer, found '" + tok + "'");
                }
                if (used != tok.size())
                    throw parse_fail(line, "expected an integer, found '" + tok + "'");
                r.push_back(v);
            }
            if (r.size() != count)
                throw parse_fail(line, "expected " + std::to_string(count) + " integers, found " + std::to_string(r.size()));
            return r;
        }

        auto read_pairs(std::istream & in) -> std::pair<int, vector<Edge>>
        {
            Lines lines{ in };
            string s;
            if (! lines.next(s))
                throw Error(ErrorKind::parse_error, "empty input");
            auto head = parse_ints(s, lines.number, 2);
            if (head[0] < 0 || head[1] < 0)
                throw parse_fail(lines.number, "negative count");
            vector<Edge> es;
            for (long i = 0 ; i < head[1] ; ++i) {
                if (! lines.next(s))
                    throw Error(ErrorKind::parse_error, "expected " + std::to_string(head[1]) + " pairs, found " + std::to_string(i));
                auto uv = parse_ints(s, lines.number, 2);
                if (uv[0] < 0 || uv[1] < 0 || uv[0] >= head[0] || uv[1] >= head[0])
                    throw parse_fail(lines.number, "vertex out of range 0.." + std::to_string(head[0] - 1));
                if (uv[0] == uv[1])
                    throw parse_fail(lines.number, "loop");
                es.emplace_back(int(uv[0]), int(uv[1]));
            }
            if (lines.next(s))
                throw parse_fail(lines.number, "more pairs than announced");
            return { int(head[0]), es };
        }

        auto wrap_errors(auto && f) -> decltype(f())
        {
            try {
                return f();
            }
            catch (const Error & e) {
                if (e.kind() == ErrorKind::invalid_input)
                    throw Error(ErrorKind::parse_error, e.what());
                throw;
            }
        }

        auto open(const string & path) -> std::ifstream
        {
            std::ifstream f(path);
            if (! f)
                throw Error(ErrorKind::parse_error, "cannot open " + path);
            return f;
        }
    }

    auto to_graph6(const Graph & g) -> string
    {
        long n = g.size();
        string out;
        if (n <= 62)
            out += char(n + 63);
        else if (n <= 258047) {
            out += char(126);
            for (int s = 12 ; s >= 0 ; s -= 6)
                out += char(((n >> s) & 63) + 63);
        }
        else {
            out += char(126);
            out += char(126);
            for (int s = 30 ; s >= 0 ; s -= 6)
                out += char(((n >> s) & 63) + 63);
        }

        int acc = 0, bits = 0;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i) {
                acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
                if (++bits == 6) {
                    out += char(acc + 63);
                    acc = bits = 0;
                }
            }
        if (bits)
            out += char((acc << (6 - bits)) + 63);
        return out;
    }

    auto from_graph6(string_view text) -> Graph
    {
        auto s = trim(text);
        if (s.starts_with(">>graph6<<"))
            s.remove_prefix(10);
        if (s.empty())
            throw Error(ErrorKind::parse_error, "graph6: empty");
        if (s.front() == ':' || s.front() == '&')
            throw Error(ErrorKind::parse_error, "graph6: sparse6 and digraph6 are not supported");
        for (char c : s)
            if (c < 63 || c > 126)
                throw Error(ErrorKind::parse_error, "graph6: byte outside 63..126");

        std::size_t pos = 0;
        long n = 0;
        auto take = [&] (int count) {
            if (pos + count > s.size())
                throw Error(ErrorKind::parse_error, "graph6: truncated size field");
            long v = 0;
            for (int i = 0 ; i < count ; ++i)
                v = (v << 6) | (s[pos++] - 63);
            return v;
        };
        if (s[0] != 126)
            n = take(1);
        else if (s.size() > 1 && s[1] != 126) {
            ++pos;
            n = take(3);
        }
        else {
            pos += 2;
            n = take(6);
        }
        if (n > 100000)
            throw Error(ErrorKind::parse_error, "graph6: " + std::to_string(n) + " vertices is too many");

        std::size_t pairs = std::size_t(n) * (n - 1) / 2;
        std::size_t need = (pairs + 5) / 6;
        if (s.size() - pos != need)
            throw Error(ErrorKind::parse_error, "graph6: expected " + std::to_string(need) + " data bytes, found "
                    + std::to_string(s.size() - pos));

        vector<Edge> es;
        std::size_t k = 0;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i, ++k) {
                int byte = s[pos + k / 6] - 63;
                if ((byte >> (5 - k % 6)) & 1)
                    es.emplace_back(i, j);
            }
        for (; k < need * 6 ; ++k)
            if (((s[pos + k / 6] - 63) >> (5 - k % 6)) & 1)
                throw Error(ErrorKind::parse_error, "graph6: nonzero padding bits");
        return Graph(int(n), es);
    }

    auto write_edge_list(std::ostream & out, const Graph & g) -> void
    {
        out << g.size() << ' ' << g.edge_count() << '\n';
        for (auto [u, v] : g.edges())
            out << u << ' ' << v << '\n';
    }

    auto read_edge_list(std::istream & in) -> Graph
    {
        return wrap_errors([&] {
            auto [n, es] = read_pairs(in);
            return Graph(n, es);
        });
    }

    auto write_arc_list(std::ostream & out, const OrientedGraph & og) -> void
    {
        out << og.size() << ' ' << og.arc_count() << '\n';
        for (auto [u, v] : og.arcs())
            out << u << ' ' << v << '\n';
    }

    auto read_arc_list(std::istream & in) -> OrientedGraph
    {
        return wrap_errors([&] {
            auto [n, as] = read_pairs(in);
            return OrientedGraph(n, as);
        });
    }

    auto read_graph(std::istream & in) -> Graph
    {
        std::stringstream all;
        all << in.rdbuf();
        auto text = all.str();
        std::istringstream probe(text);
        Lines lines{ probe };
        string first;
        if (! lines.next(first))
            throw Error(ErrorKind::parse_error, "empty input");
        bool numeric = std::all_of(first.begin(), first.end(), [] (char c) {
                return std::isdigit(static_cast<unsigned char>(c)) || std::isspace(static_cast<unsigned char>(c)) || c == '-';
                });
        if (numeric && first.find_first_of(" \t") != string::npos) {
            std::istringstream again(text);
            return read_edge_list(again);
        }
        return from_graph6(first);
    }

    auto read_graph_file(const string & path) -> Graph
    {
        auto f = open(path);
        return read_graph(f);
    }

    auto read_orientation_file(const string & path) -> OrientedGraph
    {
        auto f = open(path);
        return read_arc_list(f);
    }

    auto write_colouring(std::ostream & out, const Colouring & f) -> void
    {
        for (Vertex v = 0 ; v < f.size() ; ++v)
            out << v << ' ' << f[v] << '\n';
    }

    auto read_colouring(std::istream & in, int n, optional<int> k) -> Colouring
    {
        Lines lines{ in };
        vector<int> c(n, -1);
        string s;
        while (lines.next(s)) {
            auto vc = parse_ints(s, lines.number, 2);
            if (vc[0] < 0 || vc[0] >= n)
                throw parse_fail(lines.number, "vertex out of range 0.." + std::to_string(n - 1));
            if (vc[1] < 0)
                throw parse_fail(lines.number, "negative colour");
            if (c[vc[0]] != -1)
                throw parse_fail(lines.number, "vertex " + std::to_string(vc[0]) + " coloured twice");
            c[vc[0]] = int(vc[1]);
        }
        for (Vertex v = 0 ; v < n ; ++v)
            if (c[v] == -1)
                throw Error(ErrorKind::malformed_colouring, "vertex " + std::to_string(v) + " has no colour");
        int kk = k ? *k : (c.empty() ? 0 : 1 + *std::max_element(c.begin(), c.end()));
        return Colouring(kk, c);
    }

    auto read_colouring_file(const string & path, int n) -> Colouring
    {
        auto f = open(path);
        std::stringstream all;
        all << f.rdbuf();
        auto text = all.str();
        if (trim(text).starts_with("{")) {
            Json j;
            try {
                j = Json::parse(text);
            }
            catch (const std::exception & e) {
                throw Error(ErrorKind::parse_error, string("colouring JSON: ") + e.what());
            }
            return colouring_from_json(j, n);
        }
        std::istringstream in(text);
        return read_colouring(in, n);
    }

    auto write_vertex_map(std::ostream & out, const VertexMap & psi) -> void
    {
        for (Vertex v = 0 ; v < psi.source_size() ; ++v)
            out << v << " → " << psi[v] << '\n';
    }

    auto read_vertex_map(std::istream & in, int source_size, int target_size) -> VertexMap
    {
        Lines lines{ in };
        vector<Vertex> m(source_size, -1);
        string s;
        while (lines.next(s)) {
            for (string_view arrow : { "→", "->" }) {
                auto at = s.find(arrow);
                if (at != string::npos)
                    s.replace(at, arrow.size(), " ");
            }
            auto vw = parse_ints(s, lines.number, 2);
            if (vw[0] < 0 || vw[0] >= source_size)
                throw parse_fail(lines.number, "source vertex out of range");
            if (vw[1] < 0 || vw[1] >= target_size)
                throw parse_fail(lines.number, "target vertex out of range");
            if (m[vw[0]] != -1)
                throw parse_fail(lines.number, "vertex " + std::to_string(vw[0]) + " mapped twice");
            m[vw[0]] = int(vw[1]);
        }
        for (Vertex v = 0 ; v < source_size ; ++v)
            if (m[v] == -1)
                throw Error(ErrorKind::malformed_map, "vertex " + std::to_string(v) + " has no image");
        return VertexMap(target_size, m);
    }

    auto read_vertex_map_file(const string & path, int source_size, int target_size) -> VertexMap
    {
        auto f = open(path);
        std::stringstream all;
        all << f.rdbuf();
        auto text = all.str();
        if (trim(text).starts_with("{")) {
            Json j;
            try {
                j = Json::parse(text);
            }
            catch (const std::exception & e) {
                throw Error(ErrorKind::parse_error, string("map JSON: ") + e.what());
            }
            return vertex_map_from_json(j, source_size, target_size);
        }
        std::istringstream in(text);
        return read_vertex_map(in, source_size, target_size);
    }

    auto colouring_json(const Colouring & f, string_view witness_kind) -> Json
    {
        return Json{ { "k", f.k() }, { "assignment", f.assignment() }, { "witness_kind", witness_kind } };
    }

    auto colouring_from_json(const Json & j, int n) -> Colouring
    {
        try {
            auto k = j.at("k").get<int>();
            auto a = j.contains("f") ? j.at("f").get<vector<int>>() : j.at("assignment").get<vector<int>>();
            if (int(a.size()) != n)
                throw Error(ErrorKind::malformed_colouring, "assignment has " + std::to_string(a.size())
                        + " entries, graph has " + std::to_string(n) + " vertices");
            return Colouring(k, a);
        }
        catch (const nlohmann::json::exception & e) {
            throw Error(ErrorKind::parse_error, string("colouring JSON: ") + e.what());
        }
    }

    auto mini_json(const MiniCertificate & c) -> Json
    {
        Json h = Json::array();
        for (auto & x : c.h)
            h.push_back(x ? Json(*x) : Json(nullptr));
        return Json{ { "k", c.k() }, { "f", c.f.assignment() }, { "h", h } };
    }

    auto vertex_map_json(const VertexMap & psi, string_view kind, const Json & checks) -> Json
    {
        Json j{ { "source", psi.source_size() }, { "target", psi.target_size() }, { "map", psi.images() }, { "kind", kind } };
        for (auto & [key, value] : checks.items())
            j[key] = value;
        return j;
    }

    auto vertex_map_from_json(const Json & j, int source_size, int target_size) -> VertexMap
    {
        try {
            auto m = j.at("map").get<vector<int>>();
            if (int(m.size()) != source_size)
                throw Error(ErrorKind::malformed_map, "map has " + std::to_string(m.size()) + " entries, expected "
                        + std::to_string(source_size));
            return VertexMap(target_size, m);
        }
        catch (const nlohmann::json::exception & e) {
            throw Error(ErrorKind::parse_error, string("map JSON: ") + e.what());
        }
    }

    auto polynomial_json(const IntPolynomial & p) -> Json
    {
        Json coeffs = Json::array();
        for (auto & c : p.coefficients())
            coeffs.push_back(c.str());
        return Json{ { "degree", p.degree() }, { "coeffs", coeffs } };
    }

    auto edges_json(const Graph & g) -> Json
    {
        Json es = Json::array();
        for (auto [u, v] : g.edges())
            es.push_back({ u, v });
        return Json{ { "n", g.size() }, { "edges", es } };
    }

    auto arcs_json(const OrientedGraph & og) -> Json
    {
        Json as = Json::array();
        for (auto [u, v] : og.arcs())
            as.push_back({ u, v });
        return Json{ { "n", og.size() }, { "arcs", as } };
    }
}
