/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <starhom/isomorphism.hh>

#include <algorithm>
#include <map>
#include <numeric>

using std::map;
using std::optional;
using std::pair;
using std::vector;

namespace starhom
{
    namespace
    {
        // colours of g's vertices occupy [0, n), h's occupy [n, 2n)
        struct Refiner
        {
            const Graph & g;
            const Graph & h;
            int n;

            auto neighbours(int x) const -> std::span<const Vertex>
            {
                return x < n ? g.neighbours(x) : h.neighbours(x - n);
            }

            auto offset(int x) const -> int
            {
                return x < n ? 0 : n;
            }

            // returns false if the two sides become unbalanced
            auto refine(vector<int> & colour) const -> bool
            {
                int classes = 1 + *std::max_element(colour.begin(), colour.end());
                while (true) {
                    vector<pair<vector<int>, int>> sig(2 * n);
                    for (int x = 0 ; x < 2 * n ; ++x) {
                        sig[x].first.push_back(colour[x]);
                        vector<int> ns;
                        for (auto w : neighbours(x))
                            ns.push_back(colour[w + offset(x)]);
                        std::sort(ns.begin(), ns.end());
                        sig[x].first.insert(sig[x].first.end(), ns.begin(), ns.end());
                        sig[x].second = x;
                    }

                    map<vector<int>, int> ids;
                    for (auto & [s, x] : sig)
                        ids.emplace(s, 0);
                    int next = 0;
                    for (auto & [s, id] : ids)
                        id = next++;

                    vector<int> count(next, 0);
                    for (int x = 0 ; x < 2 * n ; ++x) {
                        colour[x] = ids[sig[x].first];
                        count[colour[x]] += (x < n ? 1 : -1);
                    }
                    if (std::any_of(count.begin(), count.end(), [] (int c) { return c != 0; }))
                        return false;
                    if (next == classes)
                        return true;
                    classes = next;
                }
            }

            auto search(vector<int> colour, optional<IsoWitness> & result) const -> bool
            {
                if (! refine(colour))
                    return false;

                // smallest non-singleton cell, lowest colour on ties
                map<int, vector<int>> cells;
                for (int x = 0 ; x < n ; ++x)
                    cells[colour[x]].push_back(x);
                int target = -1;
                std::size_t best = 0;
                for (auto & [c, members] : cells)
                    if (members.size() > 1 && (target == -1 || members.size() < best)) {
                        target = c;
                        best = members.size();
                    }

                if (target == -1) {
                    vector<int> where(2 * n + 1);
                    for (int y = n ; y < 2 * n ; ++y)
                        where[colour[y]] = y - n;
                    IsoWitness w;
                    for (int x = 0 ; x < n ; ++x)
                        w.mapping.push_back(where[colour[x]]);
                    if (verify_isomorphism(g, h, w.mapping)) {
                        result = std::move(w);
                        return true;
                    }
                    return false;
                }

                int fresh = 2 * n;
                int x = cells[target].front();
                for (int y = n ; y < 2 * n ; ++y)
                    if (colour[y] == target) {
                        auto c = colour;
                        c[x] = fresh;
                        c[y] = fresh;
                        if (search(c, result))
                            return true;
                    }
                return false;
            }
        };

        auto small_search(const Graph & g, const Graph & h) -> optional<IsoWitness>
        {
            vector<Vertex> perm(g.size());
            std::iota(perm.begin(), perm.end(), 0);
            do {
                bool ok = true;
                for (Vertex v = 0 ; ok && v < g.size() ; ++v)
                    ok = g.degree(v) == h.degree(perm[v]);
                if (ok && verify_isomorphism(g, h, perm))
                    return IsoWitness{ perm };
            } while (std::next_permutation(perm.begin(), perm.end()));
            return std::nullopt;
        }
    }

    auto is_isomorphic(const Graph & g, const Graph & h) -> optional<IsoWitness>
    {
        if (g.size() != h.size() || g.edge_count() != h.edge_count())
            return std::nullopt;
        int n = g.size();
        if (n == 0)
            return IsoWitness{};

        vector<int> dg, dh;
        for (Vertex v = 0 ; v < n ; ++v) {
            dg.push_back(g.degree(v));
            dh.push_back(h.degree(v));
        }
        std::sort(dg.begin(), dg.end());
        std::sort(dh.begin(), dh.end());
        if (dg != dh)
            return std::nullopt;

        if (n <= 8)
            return small_search(g, h);

        Refiner r{ g, h, n };
        optional<IsoWitness> result;
        r.search(vector<int>(2 * n, 0), result);
        return result;
    }

    auto verify_isomorphism(const Graph & g, const Graph & h, const vector<Vertex> & mapping) -> bool
    {
        if (g.size() != h.size() || g.edge_count() != h.edge_count() || int(mapping.size()) != g.size())
            return false;
        vector<char> hit(h.size(), 0);
        for (auto w : mapping) {
            if (w < 0 || w >= h.size() || hit[w])
                return false;
            hit[w] = 1;
        }
        for (auto [u, v] : g.edges())
            if (! h.has_edge(mapping[u], mapping[v]))
                return false;
        // equal edge counts and injectivity give the converse
        return true;
    }
}
