#pragma once

// Components of the singular locus of the compactified moduli space: closures of
// the interior components plus the boundary components with a single I1 vertex.

#include <cycov/sing_smooth.hpp>
#include <cycov/stable_graphs.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace cycov {

/// True when the generic action is generated by elliptic-tail involutions only.
inline bool pseudoreflection_only(const AutoGraph& a) {
    const Graph& g = a.graph();
    if (g.d != 2) return false;
    for (int id : g.ids_of(Colour::I1))
        if (!is_elliptic_tail(g, id)) return false;
    return true;
}

struct BoundaryComponent {
    AutoGraph graph;
    int d;
    int dim;
    int codim;
    bool manual_review = false;
    bool rigid_i1_cover = false;

    std::vector<std::string> flags() const {
        std::vector<std::string> out;
        if (manual_review) out.push_back("manual_review");
        if (rigid_i1_cover) out.push_back("rigid_I1_cover");
        return out;
    }

    bool operator==(const BoundaryComponent&) const = default;
};

/// The filter defining boundary components among all automorphism graphs.
inline bool is_boundary_candidate(const AutoGraph& a) {
    const Graph& g = a.graph();
    const auto i1 = g.ids_of(Colour::I1);
    if (i1.size() != 1 || g.ids_of(Colour::I0).empty()) return false;
    if (g.d == 2 && is_elliptic_tail(g, i1.front())) return false;
    return exceptional_pattern(a) == ExceptionalPattern::None;
}

inline int capped_order_bound(int g, int d_max, std::vector<std::string>* notices = nullptr) {
    if (d_max < 2) throw UsageError("d_max must be >= 2, got " + std::to_string(d_max));
    const int cap = prime_order_bound(g);
    if (d_max > cap) {
        if (notices)
            notices->push_back("d_max " + std::to_string(d_max) + " truncated to " + std::to_string(cap) +
                               ": no prime order above 2g+1 acts on a genus-" + std::to_string(g) + " component");
        return cap;
    }
    return d_max;
}

inline std::vector<BoundaryComponent> boundary_components(int g, int d_max, std::vector<std::string>* notices = nullptr) {
    if (g < 2) throw UsageError("genus must be >= 2, got " + std::to_string(g));
    std::vector<BoundaryComponent> out;
    for (int d : primes_up_to(capped_order_bound(g, d_max, notices))) {
        for (auto& a : enumerate_graphs(g, d, is_boundary_candidate)) {
            const int dim = stratum_dimension(a);
            const int j = a.graph().ids_of(Colour::I1).front();
            const auto data = vertex_data(a.graph(), j);
            const bool small = maximal_cyclic_exception(data.g_quotient, data.k) != MaximalCyclicException::None;
            BoundaryComponent c{std::move(a), d, dim, 3 * g - 3 - dim, small, data.g_quotient == 0 && data.k == 3};
            if (c.codim < 1) throw std::logic_error("boundary component of codimension < 1");
            out.push_back(std::move(c));
        }
    }
    return out;
}

struct AutBoundReport {
    int g;
    boost::multiprecision::cpp_int generic_lower;   ///< 2^g
    boost::multiprecision::cpp_int special_config;  ///< 2g * 6^g
    boost::multiprecision::cpp_int hurwitz_smooth;  ///< 84(g-1)
    std::vector<int> tail_orders;
    bool special_exceeds_hurwitz;

    bool operator==(const AutBoundReport&) const = default;
};

inline AutBoundReport aut_bounds(int g) {
    if (g < 2) throw UsageError("genus must be >= 2, got " + std::to_string(g));
    using boost::multiprecision::cpp_int;
    AutBoundReport r{g, cpp_int(1) << g, 2 * cpp_int(g) * boost::multiprecision::pow(cpp_int(6), g),
                     84 * cpp_int(g - 1), {2, 4, 6}, false};
    r.special_exceeds_hurwitz = r.special_config > r.hurwitz_smooth;
    return r;
}

struct DecompositionReport {
    int g;
    int d_max;
    SmoothDecomposition interior;
    std::vector<BoundaryComponent> boundary;
    std::vector<std::string> warnings;

    bool operator==(const DecompositionReport&) const = default;
};

inline DecompositionReport decompose_sing_bar(int g, int d_max) {
    if (g < 3) throw UsageError("the interior part needs genus >= 3; use boundary_components for genus 2");
    DecompositionReport r{g, d_max, decompose_sing(g), {}, {}};
    r.boundary = boundary_components(g, d_max, &r.warnings);
    r.d_max = capped_order_bound(g, d_max);
    for (const auto& rec : r.interior.manual_review)
        r.warnings.push_back("manual review: " + rec.locus.name() + ": " + rec.note);
    for (const auto& c : r.boundary) {
        if (c.flags().empty()) continue;
        std::string f;
        for (const auto& x : c.flags()) f += (f.empty() ? "" : ",") + x;
        r.warnings.push_back(f + ": " + to_text(c.graph.graph()));
    }
    return r;
}

} // namespace cycov
