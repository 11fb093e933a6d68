#pragma once

// Labelled dual graphs of a stable curve with an automorphism of prime order d.
// Vertex genera are genera of the normalized components.

#include <cycov/arithmetic.hpp>
#include <cycov/error.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace cycov {

enum class Colour { I0, I1 };

inline std::string to_string(Colour c) { return c == Colour::I0 ? "I0" : "I1"; }

struct Vertex {
    int id;
    Colour colour;
    int genus;
    std::vector<int> free_branching; ///< (k'_1..k'_{d-1}); all zero on I0 vertices

    bool operator==(const Vertex&) const = default;
};

/// A node joining two distinct components; label_u is the local rotation on u's branch.
struct Link {
    int u;
    int v;
    int label_u;
    int label_v;

    bool operator==(const Link&) const = default;
};

/// A node of a single component. n1 <= n2 after normalization; both 0 when swapped.
struct Loop {
    int v;
    int n1;
    int n2;
    bool branch_swapped = false;

    bool operator==(const Loop&) const = default;
};

struct Graph {
    int d;
    std::vector<Vertex> vertices;
    std::vector<Link> links;
    std::vector<Loop> loops;

    bool operator==(const Graph&) const = default;

    int edge_count() const { return static_cast<int>(links.size() + loops.size()); }

    std::optional<std::size_t> find(int id) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i].id == id) return i;
        return std::nullopt;
    }

    const Vertex& vertex(int id) const {
        auto i = find(id);
        if (!i) throw UsageError("no vertex with id " + std::to_string(id));
        return vertices[*i];
    }

    Vertex& vertex(int id) {
        auto i = find(id);
        if (!i) throw UsageError("no vertex with id " + std::to_string(id));
        return vertices[*i];
    }

    /// Edge-ends at a vertex; a loop counts twice.
    int valence(int id) const {
        int n = 0;
        for (const auto& l : links) n += (l.u == id) + (l.v == id);
        for (const auto& l : loops) n += 2 * (l.v == id);
        return n;
    }

    int loop_count(int id) const {
        return static_cast<int>(std::count_if(loops.begin(), loops.end(), [&](const Loop& l) { return l.v == id; }));
    }

    std::vector<int> ids_of(Colour c) const {
        std::vector<int> out;
        for (const auto& v : vertices)
            if (v.colour == c) out.push_back(v.id);
        return out;
    }
};

/// Sorts loop pairs and orders edges so that equal graphs compare equal.
inline Graph normalized(Graph g) {
    for (auto& l : g.loops)
        if (l.n1 > l.n2) std::swap(l.n1, l.n2);
    auto link_key = [](const Link& l) { return std::tuple(l.u, l.v, l.label_u, l.label_v); };
    auto loop_key = [](const Loop& l) { return std::tuple(l.v, l.branch_swapped, l.n1, l.n2); };
    std::sort(g.vertices.begin(), g.vertices.end(), [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    std::sort(g.links.begin(), g.links.end(), [&](const Link& a, const Link& b) { return link_key(a) < link_key(b); });
    std::sort(g.loops.begin(), g.loops.end(), [&](const Loop& a, const Loop& b) { return loop_key(a) < loop_key(b); });
    return g;
}

inline int graph_genus(const Graph& g) {
    int s = 0;
    for (const auto& v : g.vertices) s += v.genus;
    return s + g.edge_count() - static_cast<int>(g.vertices.size()) + 1;
}

inline bool is_connected(const Graph& g) {
    if (g.vertices.empty()) return false;
    std::set<int> seen{g.vertices.front().id};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& l : g.links) {
            if (seen.count(l.u) != seen.count(l.v)) {
                seen.insert(l.u);
                seen.insert(l.v);
                grew = true;
            }
        }
    }
    return seen.size() == g.vertices.size();
}

/// Genus-0 components meet the rest in >= 3 points, genus-1 in >= 1, total genus >= 2.
inline bool is_stable(const Graph& g) {
    for (const auto& v : g.vertices) {
        const int n = g.valence(v.id);
        if (v.genus == 0 && n < 3) return false;
        if (v.genus == 1 && n < 1) return false;
    }
    return graph_genus(g) >= 2;
}

struct VertexCoverData {
    int nu;                    ///< loops at the vertex
    std::vector<int> k_m;      ///< branching integers k_1..k_{d-1}
    int k;                     ///< sum of k_m
    int g_quotient;            ///< g' (the vertex genus itself on I0)
    int g_double_prime;        ///< g + nu
    int r;                     ///< edge-ends on I0, k on I1

    bool operator==(const VertexCoverData&) const = default;
};

namespace detail {

/// Hurwitz for a Z/d action with k fixed points on a genus-g curve, d prime: g' or nothing.
inline std::optional<int> vertex_quotient_genus(int g, int d, int k) {
    const int numer = 2 * (g - 1) - k * (d - 1);
    if (numer % (2 * d) != 0) return std::nullopt;
    const int gp = 1 + numer / (2 * d);
    if (gp < 0) return std::nullopt;
    return gp;
}

} // namespace detail

/// Branching integers and quotient genus at a vertex; throws when the vertex cover cannot exist.
inline VertexCoverData vertex_data(const Graph& g, int id) {
    const Vertex& v = g.vertex(id);
    const int d = g.d;
    VertexCoverData out{g.loop_count(id), std::vector<int>(d - 1, 0), 0, v.genus, v.genus + g.loop_count(id),
                        g.valence(id)};
    if (v.colour == Colour::I0) return out;

    auto bump = [&](int label) {
        if (label > 0 && label < d) ++out.k_m[label - 1];
    };
    for (int m = 1; m < d; ++m) out.k_m[m - 1] = v.free_branching.at(m - 1);
    for (const auto& l : g.links) {
        if (l.u == id) bump(l.label_u);
        if (l.v == id) bump(l.label_v);
    }
    for (const auto& l : g.loops)
        if (l.v == id && !l.branch_swapped) bump(l.n1), bump(l.n2);
    out.k = std::accumulate(out.k_m.begin(), out.k_m.end(), 0);
    out.r = out.k;

    std::int64_t star = 0;
    for (int m = 1; m < d; ++m) star += static_cast<std::int64_t>(m) * out.k_m[m - 1];
    if (mod(star, d) != 0)
        throw ConstraintViolation("vertex-star", "vertex " + std::to_string(id) + ": sum m*k_m = " +
                                                     std::to_string(star) + " is not divisible by " + std::to_string(d));
    auto gp = detail::vertex_quotient_genus(v.genus, d, out.k);
    if (!gp)
        throw ConstraintViolation("vertex-hurwitz", "vertex " + std::to_string(id) + ": genus " + std::to_string(v.genus) +
                                                        " with " + std::to_string(out.k) +
                                                        " fixed points has no integral quotient genus");
    out.g_quotient = *gp;
    return out;
}

namespace detail {

/// Clauses shared by pre-graphs and automorphism graphs; `pre` relaxes the maximality ones.
inline std::vector<Violation> check_graph(const Graph& g, bool pre) {
    std::vector<Violation> out;
    auto bad = [&](std::string clause, std::string msg) { out.push_back({std::move(clause), std::move(msg)}); };
    const int d = g.d;
    if (!is_prime(d)) {
        bad("prime-order", "order " + std::to_string(d) + " is not prime");
        return out;
    }
    if (g.vertices.empty()) {
        bad("nonempty", "graph has no vertices");
        return out;
    }
    std::set<int> ids;
    for (const auto& v : g.vertices) {
        const auto who = "vertex " + std::to_string(v.id);
        if (!ids.insert(v.id).second) bad("vertex-ids-unique", "duplicate vertex id " + std::to_string(v.id));
        if (v.genus < 0) bad("genus-nonnegative", who + " has negative genus");
        if (static_cast<int>(v.free_branching.size()) != d - 1) {
            bad("free-branching-length", who + " needs " + std::to_string(d - 1) + " free branching counts");
            continue;
        }
        for (int k : v.free_branching)
            if (k < 0) bad("free-branching-nonnegative", who + " has a negative free branching count");
        if (v.colour == Colour::I0 && std::any_of(v.free_branching.begin(), v.free_branching.end(), [](int k) { return k; }))
            bad("free-branching-I0", who + " is I0 but has free fixed points");
    }
    if (!out.empty()) return out;

    auto colour = [&](int id) { return g.vertex(id).colour; };
    for (const auto& l : g.links) {
        const auto who = "link " + std::to_string(l.u) + "-" + std::to_string(l.v);
        if (!ids.count(l.u) || !ids.count(l.v)) {
            bad("edge-endpoint", who + " references an unknown vertex");
            continue;
        }
        if (l.u == l.v) {
            bad("link-distinct-ends", who + " joins a vertex to itself; use a loop");
            continue;
        }
        if (l.label_u < 0 || l.label_u >= d || l.label_v < 0 || l.label_v >= d) {
            bad("label-range", who + " has a label outside 0..d-1");
            continue;
        }
        if ((l.label_u == 0) != (colour(l.u) == Colour::I0) || (l.label_v == 0) != (colour(l.v) == Colour::I0))
            bad("label-zero-iff-I0", who + ": a label is 0 exactly at an I0 end");
        if (!pre && colour(l.u) == Colour::I0 && colour(l.v) == Colour::I0)
            bad("no-I0-link", who + " joins two I0 vertices");
        if (!pre && l.label_u != 0 && l.label_u + l.label_v == d)
            bad("complementary-labels", who + " has labels summing to d (smoothable node)");
    }
    for (const auto& l : g.loops) {
        const auto who = "loop at " + std::to_string(l.v);
        if (!ids.count(l.v)) {
            bad("edge-endpoint", who + " references an unknown vertex");
            continue;
        }
        const bool at_i0 = colour(l.v) == Colour::I0;
        if (l.branch_swapped) {
            if (!pre) bad("branch-swapped", who + " exchanges its branches (smoothable node)");
            else if (d != 2) bad("branch-swapped", who + " exchanges branches, which needs d = 2");
            if (at_i0) bad("branch-swapped", who + " exchanges branches on an I0 vertex");
            if (l.n1 != 0 || l.n2 != 0) bad("label-range", who + " is branch-swapped and carries labels");
            continue;
        }
        if (at_i0) {
            if (!pre) bad("no-I0-loop", who + " sits on an I0 vertex");
            else if (l.n1 != 0 || l.n2 != 0) bad("label-zero-iff-I0", who + " on an I0 vertex needs labels {0,0}");
            continue;
        }
        if (l.n1 < 1 || l.n1 >= d || l.n2 < 1 || l.n2 >= d) {
            bad("label-range", who + " has a label outside 1..d-1");
            continue;
        }
        if (!pre && l.n1 + l.n2 == d) bad("complementary-labels", who + " has labels summing to d (smoothable node)");
    }
    if (!out.empty()) return out;

    if (!is_connected(g)) bad("connected", "graph is not connected");
    if (!pre && g.ids_of(Colour::I1).empty()) bad("nontrivial-action", "no I1 vertex: the automorphism is the identity");
    for (const auto& v : g.vertices) {
        try {
            (void)vertex_data(g, v.id);
        } catch (const ConstraintViolation& e) {
            out.insert(out.end(), e.violations().begin(), e.violations().end());
        }
    }
    if (!is_stable(g)) bad("stable", "graph is not stable");
    return out;
}

} // namespace detail

inline std::vector<Violation> check_pregraph(const Graph& g) { return detail::check_graph(g, true); }
inline std::vector<Violation> check_autograph(const Graph& g) { return detail::check_graph(g, false); }

/// A graph satisfying every maximality clause.
class AutoGraph {
public:
    explicit AutoGraph(Graph g) : g_(normalized(std::move(g))) {
        if (auto v = check_autograph(g_); !v.empty()) throw ConstraintViolation(std::move(v));
    }
    const Graph& graph() const noexcept { return g_; }
    int order() const noexcept { return g_.d; }
    bool operator==(const AutoGraph&) const = default;

private:
    Graph g_;
};

/// A graph that may still contain smoothable nodes.
class PreGraph {
public:
    explicit PreGraph(Graph g) : g_(normalized(std::move(g))) {
        if (auto v = check_pregraph(g_); !v.empty()) throw ConstraintViolation(std::move(v));
    }
    PreGraph(const AutoGraph& a) : g_(a.graph()) {} // NOLINT: every maximal graph is a pre-graph
    const Graph& graph() const noexcept { return g_; }
    int order() const noexcept { return g_.d; }
    bool operator==(const PreGraph&) const = default;

private:
    Graph g_;
};

} // namespace cycov
