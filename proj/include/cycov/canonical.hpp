#pragma once

// Canonical encoding of a labelled graph up to vertex relabelling and the
// simultaneous action of (Z/d)^* on all labels and free branching sequences.

#include <cycov/graph.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace cycov {

struct CanonicalForm {
    std::vector<int> code;
    Graph graph; ///< relabelled representative, ids 0..V-1
    std::string text;

    bool operator==(const CanonicalForm& o) const { return code == o.code; }
    auto operator<=>(const CanonicalForm& o) const { return code <=> o.code; }
};

inline std::string to_text(const Graph& g) {
    std::string s = "d=" + std::to_string(g.d);
    for (const auto& v : g.vertices) {
        s += " | v" + std::to_string(v.id) + ":" + to_string(v.colour) + " g=" + std::to_string(v.genus);
        if (v.colour == Colour::I1) {
            s += " (";
            for (std::size_t i = 0; i < v.free_branching.size(); ++i)
                s += (i ? "," : "") + std::to_string(v.free_branching[i]);
            s += ")";
        }
    }
    for (const auto& l : g.links)
        s += " | " + std::to_string(l.u) + "-" + std::to_string(l.v) + " (" + std::to_string(l.label_u) + "," +
             std::to_string(l.label_v) + ")";
    for (const auto& l : g.loops) {
        s += " | " + std::to_string(l.v) + " loop ";
        s += l.branch_swapped ? "swapped" : "{" + std::to_string(l.n1) + "," + std::to_string(l.n2) + "}";
    }
    return s;
}

namespace detail {

/// Vertex classes from colour refinement; only label-free data, so invariant under units too.
inline std::vector<int> refined_ranks(const Graph& g) {
    const std::size_t n = g.vertices.size();
    std::map<int, std::size_t> at;
    for (std::size_t i = 0; i < n; ++i) at[g.vertices[i].id] = i;

    using Sig = std::vector<int>;
    std::vector<Sig> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& v = g.vertices[i];
        int free = 0;
        for (int k : v.free_branching) free += k;
        sig[i] = {static_cast<int>(v.colour), v.genus, g.valence(v.id), g.loop_count(v.id), free};
    }
    auto to_ranks = [&](const std::vector<Sig>& s) {
        std::vector<Sig> sorted(s);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> r(n);
        for (std::size_t i = 0; i < n; ++i)
            r[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), s[i]) - sorted.begin());
        return std::pair(r, sorted.size());
    };
    auto [rank, classes] = to_ranks(sig);
    for (;;) {
        std::vector<Sig> next(n);
        for (std::size_t i = 0; i < n; ++i) next[i] = {rank[i]};
        std::vector<std::vector<int>> nbr(n);
        for (const auto& l : g.links) {
            nbr[at[l.u]].push_back(rank[at[l.v]]);
            nbr[at[l.v]].push_back(rank[at[l.u]]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            std::sort(nbr[i].begin(), nbr[i].end());
            next[i].insert(next[i].end(), nbr[i].begin(), nbr[i].end());
        }
        auto [r2, c2] = to_ranks(next);
        if (c2 == classes) return rank;
        rank = std::move(r2);
        classes = c2;
    }
}

inline std::vector<int> act_on_counts(const std::vector<int>& counts, int r, int d) {
    std::vector<int> out(counts.size(), 0);
    for (int i = 1; i < d; ++i) out[mod(static_cast<std::int64_t>(r) * i, d) - 1] = counts[i - 1];
    return out;
}

/// Graph with vertex `order[p]` renamed p and all labels multiplied by the unit r.
inline Graph relabel(const Graph& g, const std::vector<int>& order, int r) {
    const int d = g.d;
    std::map<int, int> pos;
    for (std::size_t p = 0; p < order.size(); ++p) pos[g.vertices[order[p]].id] = static_cast<int>(p);
    auto lab = [&](int x) { return static_cast<int>(mod(static_cast<std::int64_t>(r) * x, d)); };
    Graph out{d, {}, {}, {}};
    for (std::size_t p = 0; p < order.size(); ++p) {
        Vertex v = g.vertices[order[p]];
        v.id = static_cast<int>(p);
        v.free_branching = act_on_counts(v.free_branching, r, d);
        out.vertices.push_back(std::move(v));
    }
    for (const auto& l : g.links) {
        Link x{pos[l.u], pos[l.v], lab(l.label_u), lab(l.label_v)};
        if (x.u > x.v) x = {x.v, x.u, x.label_v, x.label_u};
        out.links.push_back(x);
    }
    for (const auto& l : g.loops) out.loops.push_back({pos[l.v], lab(l.n1), lab(l.n2), l.branch_swapped});
    return normalized(std::move(out));
}

inline std::vector<int> encode(const Graph& g) {
    std::vector<int> c{g.d, static_cast<int>(g.vertices.size()), static_cast<int>(g.links.size()),
                       static_cast<int>(g.loops.size())};
    for (const auto& v : g.vertices) {
        c.push_back(static_cast<int>(v.colour));
        c.push_back(v.genus);
        c.insert(c.end(), v.free_branching.begin(), v.free_branching.end());
    }
    for (const auto& l : g.links) c.insert(c.end(), {l.u, l.v, l.label_u, l.label_v});
    for (const auto& l : g.loops) c.insert(c.end(), {l.v, l.branch_swapped ? 1 : 0, l.n1, l.n2});
    return c;
}

} // namespace detail

inline CanonicalForm canonical_graph(const Graph& g) {
    const auto rank = detail::refined_ranks(g);
    const int n = static_cast<int>(g.vertices.size());

    // cells in rank order; permute within each cell
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return rank[a] < rank[b]; });
    std::vector<std::pair<int, int>> cells; // [begin, end)
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && rank[order[j]] == rank[order[i]]) ++j;
        cells.push_back({i, j});
        i = j;
    }

    const auto unit_list = units(g.d);
    std::optional<std::vector<int>> best;
    Graph best_graph;
    auto consider = [&]() {
        for (int r : unit_list) {
            Graph h = detail::relabel(g, order, r);
            auto code = detail::encode(h);
            if (!best || code < *best) {
                best = std::move(code);
                best_graph = std::move(h);
            }
        }
    };
    auto walk = [&](auto&& self, std::size_t c) -> void {
        if (c == cells.size()) {
            consider();
            return;
        }
        auto b = order.begin() + cells[c].first;
        auto e = order.begin() + cells[c].second;
        std::sort(b, e);
        do {
            self(self, c + 1);
        } while (std::next_permutation(b, e));
    };
    walk(walk, 0);
    return {*best, best_graph, to_text(best_graph)};
}

} // namespace cycov
