#pragma once

// Bounded enumeration of stable dual graphs and of the admissible
// automorphism graphs of prime order d supported on them.

#include <cycov/canonical.hpp>
#include <cycov/graph.hpp>

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace cycov {

/// Genus-labelled multigraph without colours: mult[i][j] links (i < j), mult[i][i] loops.
struct Shape {
    std::vector<int> genus;
    std::vector<std::vector<int>> mult;

    Graph as_graph() const {
        const int n = static_cast<int>(genus.size());
        Graph g{2, {}, {}, {}};
        for (int i = 0; i < n; ++i) g.vertices.push_back({i, Colour::I0, genus[i], {0}});
        for (int i = 0; i < n; ++i) {
            for (int e = 0; e < mult[i][i]; ++e) g.loops.push_back({i, 0, 0, false});
            for (int j = i + 1; j < n; ++j)
                for (int e = 0; e < mult[i][j]; ++e) g.links.push_back({i, j, 0, 0});
        }
        return g;
    }
};

namespace detail {

inline void genus_vectors(int n, int max_sum, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (int x = std::min(cap, max_sum); x >= 0; --x) {
        cur.push_back(x);
        genus_vectors(n, max_sum - x, x, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

/// Stable genus-g dual graphs, one per isomorphism class, in canonical order.
inline std::vector<Shape> stable_shapes(int g) {
    if (g < 2) throw UsageError("genus must be >= 2");
    const int max_vertices = 2 * g - 2, max_edges = 3 * g - 3;
    std::map<std::vector<int>, Shape> found;

    for (int n = 1; n <= max_vertices; ++n) {
        std::vector<std::vector<int>> gvs;
        std::vector<int> cur;
        detail::genus_vectors(n, g, g, cur, gvs);
        for (const auto& gv : gvs) {
            int sum = 0;
            for (int x : gv) sum += x;
            const int edges = g - sum + n - 1;
            if (edges > max_edges) continue;

            std::vector<std::pair<int, int>> slots;
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) slots.push_back({i, j});
            Shape s{gv, std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
            std::vector<int> deg(n, 0);

            auto row_ok = [&](int i) {
                if (gv[i] == 0 && deg[i] < 3) return false;
                if (gv[i] == 1 && deg[i] < 1) return false;
                // symmetry breaking: equal genera in a row have non-increasing degree
                if (i > 0 && gv[i] == gv[i - 1] && deg[i] > deg[i - 1]) return false;
                return true;
            };
            auto place = [&](auto&& self, std::size_t slot, int left) -> void {
                if (slot == slots.size()) {
                    if (left != 0) return;
                    Graph gr = s.as_graph();
                    if (!is_connected(gr)) return;
                    auto c = canonical_graph(gr);
                    if (!found.count(c.code)) {
                        Shape canon{{}, std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
                        for (const auto& v : c.graph.vertices) canon.genus.push_back(v.genus);
                        for (const auto& l : c.graph.links) ++canon.mult[l.u][l.v];
                        for (const auto& l : c.graph.loops) ++canon.mult[l.v][l.v];
                        found.emplace(c.code, std::move(canon));
                    }
                    return;
                }
                const auto [i, j] = slots[slot];
                const bool row_end = slot + 1 == slots.size() || slots[slot + 1].first != i;
                for (int m = 0; m <= left; ++m) {
                    s.mult[i][j] = m;
                    deg[i] += (i == j ? 2 : 1) * m;
                    if (i != j) deg[j] += m;
                    if (!row_end || row_ok(i)) self(self, slot + 1, left - m);
                    deg[i] -= (i == j ? 2 : 1) * m;
                    if (i != j) deg[j] -= m;
                }
                s.mult[i][j] = 0;
            };
            place(place, 0, edges);
        }
    }
    std::vector<Shape> out;
    for (auto& [code, shape] : found) out.push_back(std::move(shape));
    return out;
}

/// Largest fixed-point count of an order-d automorphism of a genus-g curve (d prime).
constexpr int max_fixed_points(int g, int d) { return (2 * g - 2 + 2 * d) / (d - 1); }

/// Free branching sequences completing the edge labels `edge_counts` at a vertex of genus g.
inline std::vector<std::vector<int>> free_completions(int g, int d, const std::vector<int>& edge_counts) {
    int ends = 0;
    std::int64_t star = 0;
    for (int m = 1; m < d; ++m) ends += edge_counts[m - 1], star += static_cast<std::int64_t>(m) * edge_counts[m - 1];
    std::vector<std::vector<int>> out;
    for (int k = ends; k <= max_fixed_points(g, d); ++k) {
        if (!detail::vertex_quotient_genus(g, d, k)) continue;
        std::vector<int> free(d - 1, 0);
        auto fill = [&](auto&& self, int m, int left, std::int64_t s) -> void {
            if (m == d - 1) {
                free[m - 1] = left;
                if (mod(s + static_cast<std::int64_t>(m) * left, d) == 0) out.push_back(free);
                return;
            }
            for (int x = 0; x <= left; ++x) {
                free[m - 1] = x;
                self(self, m + 1, left - x, s + static_cast<std::int64_t>(m) * x);
            }
        };
        fill(fill, 1, k - ends, star);
    }
    return out;
}

using GraphFilter = std::function<bool(const AutoGraph&)>;

/// Admissible stable automorphism graphs of genus g and prime order d, one per numerical type.
inline std::vector<AutoGraph> enumerate_graphs(int g, int d, const GraphFilter& filter = {}) {
    if (g < 2) throw UsageError("genus must be >= 2, got " + std::to_string(g));
    if (!is_prime(d)) throw UsageError("order must be prime, got " + std::to_string(d));
    std::map<std::vector<int>, Graph> found;

    for (const auto& shape : stable_shapes(g)) {
        const int n = static_cast<int>(shape.genus.size());
        if (n > 2 * g - 2 || shape.as_graph().edge_count() > 3 * g - 3)
            throw std::logic_error("stable shape exceeds the vertex or edge bound");
        for (int mask = 1; mask < (1 << n); ++mask) { // bit set = I1
            auto in_i1 = [&](int i) { return (mask >> i) & 1; };
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                if (in_i1(i)) {
                    int ends = 2 * shape.mult[i][i];
                    for (int j = 0; j < n; ++j)
                        if (j != i) ends += shape.mult[std::min(i, j)][std::max(i, j)];
                    ok = ends <= max_fixed_points(shape.genus[i], d);
                    continue;
                }
                if (shape.mult[i][i] > 0) ok = false;
                for (int j = i + 1; j < n && ok; ++j)
                    if (!in_i1(j) && shape.mult[i][j] > 0) ok = false;
            }
            if (!ok) continue;

            // label tuples per slot: (label at i, label at j), or the loop pair
            struct Slot {
                int i, j, count;
                std::vector<std::pair<int, int>> tuples;
            };
            std::vector<Slot> slots;
            for (int i = 0; i < n; ++i) {
                for (int j = i; j < n; ++j) {
                    const int c = shape.mult[i][j];
                    if (c == 0) continue;
                    Slot s{i, j, c, {}};
                    if (i == j) {
                        for (int a = 1; a < d; ++a)
                            for (int b = a; b < d; ++b)
                                if (a + b != d) s.tuples.push_back({a, b});
                    } else {
                        const bool ai = in_i1(i), aj = in_i1(j);
                        for (int a = ai ? 1 : 0; a < (ai ? d : 1); ++a)
                            for (int b = aj ? 1 : 0; b < (aj ? d : 1); ++b)
                                if (!(ai && aj && a + b == d)) s.tuples.push_back({a, b});
                    }
                    slots.push_back(std::move(s));
                }
            }

            Graph base{d, {}, {}, {}};
            for (int i = 0; i < n; ++i)
                base.vertices.push_back({i, in_i1(i) ? Colour::I1 : Colour::I0, shape.genus[i], std::vector<int>(d - 1, 0)});

            auto finish = [&](Graph& gr) {
                std::vector<std::vector<std::vector<int>>> choices(n);
                for (int i = 0; i < n; ++i) {
                    if (!in_i1(i)) continue;
                    std::vector<int> counts(d - 1, 0);
                    for (const auto& l : gr.links) {
                        if (l.u == i) ++counts[l.label_u - 1];
                        if (l.v == i) ++counts[l.label_v - 1];
                    }
                    for (const auto& l : gr.loops)
                        if (l.v == i) ++counts[l.n1 - 1], ++counts[l.n2 - 1];
                    choices[i] = free_completions(shape.genus[i], d, counts);
                    if (choices[i].empty()) return;
                }
                auto pick = [&](auto&& self, int i) -> void {
                    if (i == n) {
                        auto c = canonical_graph(gr);
                        found.emplace(std::move(c.code), std::move(c.graph));
                        return;
                    }
                    if (!in_i1(i)) return self(self, i + 1);
                    for (const auto& f : choices[i]) {
                        gr.vertices[i].free_branching = f;
                        self(self, i + 1);
                    }
                    gr.vertices[i].free_branching.assign(d - 1, 0);
                };
                pick(pick, 0);
            };

            Graph gr = base;
            // parallel edges are interchangeable: choose a non-decreasing sequence of tuple indices per slot
            auto label = [&](auto&& self, std::size_t si, int within, std::size_t from) -> void {
                if (si == slots.size()) return finish(gr);
                const auto& s = slots[si];
                if (within == s.count) return self(self, si + 1, 0, 0);
                for (std::size_t t = from; t < s.tuples.size(); ++t) {
                    const auto [a, b] = s.tuples[t];
                    if (s.i == s.j) gr.loops.push_back({s.i, a, b, false});
                    else gr.links.push_back({s.i, s.j, a, b});
                    self(self, si, within + 1, t);
                    if (s.i == s.j) gr.loops.pop_back();
                    else gr.links.pop_back();
                }
            };
            label(label, 0, 0, 0);
        }
    }

    std::vector<AutoGraph> out;
    for (auto& [code, gr] : found) {
        AutoGraph a(std::move(gr));
        if (!filter || filter(a)) out.push_back(std::move(a));
    }
    return out;
}

} // namespace cycov
