#pragma once

// Equivariant smoothing of nodes, simplification to the maximal type,
// enlargements, stratum dimensions and the special boundary patterns.

#include <cycov/graph.hpp>

#include <string>
#include <vector>

namespace cycov {

struct EdgeRef {
    enum class Kind { Link, Loop };
    Kind kind;
    std::size_t index; ///< position in the (normalized) links or loops vector

    bool operator==(const EdgeRef&) const = default;
};

inline std::string describe(const Graph& g, EdgeRef e) {
    if (e.kind == EdgeRef::Kind::Link) {
        const auto& l = g.links.at(e.index);
        return "link " + std::to_string(l.u) + "-" + std::to_string(l.v) + " (" + std::to_string(l.label_u) + "," +
               std::to_string(l.label_v) + ")";
    }
    const auto& l = g.loops.at(e.index);
    if (l.branch_swapped) return "branch-swapped loop at " + std::to_string(l.v);
    return "loop at " + std::to_string(l.v) + " {" + std::to_string(l.n1) + "," + std::to_string(l.n2) + "}";
}

inline bool is_smoothable(const Graph& g, EdgeRef e) {
    if (e.kind == EdgeRef::Kind::Link) {
        const auto& l = g.links.at(e.index);
        const bool both_i0 = g.vertex(l.u).colour == Colour::I0 && g.vertex(l.v).colour == Colour::I0;
        return both_i0 || mod(l.label_u + l.label_v, g.d) == 0;
    }
    const auto& l = g.loops.at(e.index);
    if (l.branch_swapped) return g.d == 2;
    return mod(l.n1 + l.n2, g.d) == 0;
}

inline std::vector<EdgeRef> smoothable_nodes(const PreGraph& p) {
    const Graph& g = p.graph();
    std::vector<EdgeRef> out;
    for (std::size_t i = 0; i < g.links.size(); ++i)
        if (is_smoothable(g, {EdgeRef::Kind::Link, i})) out.push_back({EdgeRef::Kind::Link, i});
    for (std::size_t i = 0; i < g.loops.size(); ++i)
        if (is_smoothable(g, {EdgeRef::Kind::Loop, i})) out.push_back({EdgeRef::Kind::Loop, i});
    return out;
}

inline PreGraph smooth_node(const PreGraph& p, EdgeRef e) {
    const Graph& src = p.graph();
    const std::size_t n = e.kind == EdgeRef::Kind::Link ? src.links.size() : src.loops.size();
    if (e.index >= n) throw UsageError("no such edge");
    if (!is_smoothable(src, e))
        throw ConstraintViolation("not-smoothable", describe(src, e) + " is not an equivariantly smoothable node");
    Graph g = src;

    if (e.kind == EdgeRef::Kind::Loop) {
        const Loop l = g.loops[e.index];
        g.loops.erase(g.loops.begin() + static_cast<std::ptrdiff_t>(e.index));
        Vertex& v = g.vertex(l.v);
        v.genus += 1;
        // xy = t with the branches exchanged: the two points x = y = +-sqrt(t) become fixed.
        if (l.branch_swapped) v.free_branching[0] += 2;
        return PreGraph(std::move(g));
    }

    const Link l = g.links[e.index];
    g.links.erase(g.links.begin() + static_cast<std::ptrdiff_t>(e.index));
    const int keep = std::min(l.u, l.v), gone = std::max(l.u, l.v);
    const Vertex other = g.vertex(gone);
    Vertex& merged = g.vertex(keep);
    merged.genus += other.genus;
    for (std::size_t m = 0; m < merged.free_branching.size(); ++m) merged.free_branching[m] += other.free_branching[m];
    g.vertices.erase(g.vertices.begin() + static_cast<std::ptrdiff_t>(*g.find(gone)));
    for (auto& x : g.loops)
        if (x.v == gone) x.v = keep;

    std::vector<Link> links;
    for (Link x : g.links) {
        if (x.u == gone) x.u = keep;
        if (x.v == gone) x.v = keep;
        if (x.u == x.v) g.loops.push_back({x.u, x.label_u, x.label_v, false});
        else links.push_back(x);
    }
    g.links = std::move(links);
    return PreGraph(std::move(g));
}

struct SimplifyResult {
    AutoGraph graph;
    std::vector<std::string> trace;
};

/// Smooths the first smoothable node until none is left.
inline PreGraph simplify_pre(const PreGraph& p, std::vector<std::string>* trace = nullptr) {
    PreGraph cur = p;
    for (;;) {
        auto nodes = smoothable_nodes(cur);
        if (nodes.empty()) return cur;
        if (trace) trace->push_back("smooth " + describe(cur.graph(), nodes.front()));
        cur = smooth_node(cur, nodes.front());
    }
}

inline SimplifyResult simplify(const PreGraph& p) {
    std::vector<std::string> trace;
    PreGraph done = simplify_pre(p, &trace);
    return {AutoGraph(done.graph()), std::move(trace)};
}

/// Makes the automorphism trivial on the given components, without smoothing anything.
inline PreGraph recolour_to_identity(const Graph& src, const std::vector<int>& ids) {
    Graph g = src;
    for (int id : ids) {
        Vertex& v = g.vertex(id);
        if (v.colour != Colour::I1) throw UsageError("vertex " + std::to_string(id) + " is not in I1");
        v.colour = Colour::I0;
        std::fill(v.free_branching.begin(), v.free_branching.end(), 0);
        for (auto& l : g.links) {
            if (l.u == id) l.label_u = 0;
            if (l.v == id) l.label_v = 0;
        }
        for (auto& l : g.loops)
            if (l.v == id) l = {id, 0, 0, false};
    }
    return PreGraph(std::move(g));
}

namespace detail {

inline bool meets_i0(const Graph& g, int j) {
    for (const auto& l : g.links) {
        if (l.u == j && g.vertex(l.v).colour == Colour::I0) return true;
        if (l.v == j && g.vertex(l.u).colour == Colour::I0) return true;
    }
    return false;
}

inline void require_i1(const Graph& g, int j) {
    if (g.vertex(j).colour != Colour::I1) throw UsageError("vertex " + std::to_string(j) + " is not in I1");
    if (g.ids_of(Colour::I1).size() < 2) throw UsageError("enlargement needs at least two I1 vertices");
}

} // namespace detail

inline AutoGraph enlarge_type1(const AutoGraph& a, int j) {
    const Graph& g = a.graph();
    detail::require_i1(g, j);
    if (detail::meets_i0(g, j)) throw UsageError("type 1 enlargement needs a vertex meeting no I0 vertex");
    return simplify(recolour_to_identity(g, {j})).graph;
}

inline AutoGraph enlarge_type2(const AutoGraph& a, int j) {
    const Graph& g = a.graph();
    detail::require_i1(g, j);
    if (!detail::meets_i0(g, j)) throw UsageError("type 2 enlargement needs a vertex meeting an I0 vertex");
    return simplify(recolour_to_identity(g, {j})).graph;
}

/// Trivial action everywhere except on j, then smoothing.
inline AutoGraph enlarge_max(const AutoGraph& a, int j) {
    const Graph& g = a.graph();
    detail::require_i1(g, j);
    std::vector<int> others;
    for (int id : g.ids_of(Colour::I1))
        if (id != j) others.push_back(id);
    return simplify(recolour_to_identity(g, others)).graph;
}

/// 2g - 2 + n > 0.
constexpr bool stable_range(int g, int n) { return 2 * g - 2 + n > 0; }

/// Dimension of the family of pairs with this numerical type.
inline int stratum_dimension(const Graph& g) {
    if (auto v = check_pregraph(g); !v.empty()) throw ConstraintViolation(std::move(v));
    int dim = 0;
    for (const auto& v : g.vertices) {
        const auto data = vertex_data(g, v.id);
        const int gg = v.colour == Colour::I0 ? v.genus : data.g_quotient;
        if (!stable_range(gg, data.r))
            throw ConstraintViolation("unstable-summand", "vertex " + std::to_string(v.id) + " contributes M_{" +
                                                              std::to_string(gg) + "," + std::to_string(data.r) + "}");
        dim += 3 * gg - 3 + data.r;
    }
    return dim;
}

inline int stratum_dimension(const AutoGraph& a) { return stratum_dimension(a.graph()); }

enum class DivisorException { None, EllipticTail, Genus2Pair };
enum class ExceptionalPattern { None, IIa, IIb };

inline std::string to_string(DivisorException e) {
    switch (e) {
    case DivisorException::None: return "none";
    case DivisorException::EllipticTail: return "elliptic_tail";
    case DivisorException::Genus2Pair: return "genus2_pair";
    }
    return "?";
}

inline std::string to_string(ExceptionalPattern e) {
    switch (e) {
    case ExceptionalPattern::None: return "none";
    case ExceptionalPattern::IIa: return "IIa";
    case ExceptionalPattern::IIb: return "IIb";
    }
    return "?";
}

inline DivisorException divisor_exception(const Graph& g) {
    if (g.d != 2 || g.vertices.size() != 2 || g.links.size() != 1 || !g.loops.empty()) return DivisorException::None;
    const auto& a = g.vertices[0];
    const auto& b = g.vertices[1];
    if (a.colour == Colour::I1 && b.colour == Colour::I1 && a.genus == 1 && b.genus == 1)
        return DivisorException::Genus2Pair;
    const Vertex* tail = a.colour == Colour::I1 ? &a : &b;
    const Vertex* rest = a.colour == Colour::I1 ? &b : &a;
    if (tail->colour == Colour::I1 && rest->colour == Colour::I0 && tail->genus == 1) return DivisorException::EllipticTail;
    return DivisorException::None;
}

/// Genus 1, one edge-end, no loops: an elliptic tail carrying the action.
inline bool is_elliptic_tail(const Graph& g, int id) {
    const auto& v = g.vertex(id);
    return v.genus == 1 && g.loop_count(id) == 0 && g.valence(id) == 1;
}

/// The two degenerations of z^p = x^2 - 1 whose order-p action extends to order 2p.
inline ExceptionalPattern exceptional_pattern(const AutoGraph& a) {
    const Graph& g = a.graph();
    const int p = g.d;
    if (p == 2) return ExceptionalPattern::None;
    const auto i1 = g.ids_of(Colour::I1);
    if (i1.size() != 1) return ExceptionalPattern::None;
    const int j = i1.front();
    const auto& vj = g.vertex(j);
    if (std::any_of(vj.free_branching.begin(), vj.free_branching.end(), [](int k) { return k; }))
        return ExceptionalPattern::None;
    const auto data = vertex_data(g, j);
    if (data.g_quotient != 0 || data.k != 3) return ExceptionalPattern::None;

    // label at j and the far endpoint, for links at j
    std::vector<std::pair<int, int>> ends;
    for (const auto& l : g.links) {
        if (l.u == j) ends.push_back({l.label_u, l.v});
        if (l.v == j) ends.push_back({l.label_v, l.u});
    }
    auto attached_ok = [&](int id) { return g.vertex(id).colour == Colour::I0 && g.vertex(id).genus >= 1; };
    auto pattern = [&](int a1, int a2, int b) { return a1 == a2 && mod(b + 2 * a1, p) == 0; };

    const int loops = g.loop_count(j);
    if (loops == 1 && ends.size() == 1) {
        const Loop& l = *std::find_if(g.loops.begin(), g.loops.end(), [&](const Loop& x) { return x.v == j; });
        if (attached_ok(ends[0].second) && pattern(l.n1, l.n2, ends[0].first)) return ExceptionalPattern::IIa;
        return ExceptionalPattern::None;
    }
    if (loops == 0 && ends.size() == 3) {
        std::set<int> far{ends[0].second, ends[1].second, ends[2].second};
        if (far.size() != 3) return ExceptionalPattern::None;
        for (const auto& e : ends)
            if (!attached_ok(e.second)) return ExceptionalPattern::None;
        for (int b = 0; b < 3; ++b) {
            const auto& x = ends[(b + 1) % 3];
            const auto& y = ends[(b + 2) % 3];
            if (pattern(x.first, y.first, ends[b].first) &&
                g.vertex(x.second).genus == g.vertex(y.second).genus)
                return ExceptionalPattern::IIb;
        }
    }
    return ExceptionalPattern::None;
}

} // namespace cycov
