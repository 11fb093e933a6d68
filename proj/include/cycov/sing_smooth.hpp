#pragma once

// Which prime-order loci M_{g;p,[k]} are irreducible components of the singular
// locus of M_g, and which sit properly inside a bigger symmetric locus.

#include <cycov/arithmetic.hpp>
#include <cycov/branching.hpp>
#include <cycov/error.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycov {

enum class Verdict { Component, Redundant, ExcludedPseudoreflection, ManualReview };
enum class CaseTag { Case1, Case2, Case3, Case4_Z2, Case4_Z3 };
enum class NormalizerShape { Dihedral, DihedralTimesZ2, Cyclic2p, Klein4, Cyclic3Extension };

inline std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Component: return "Component";
    case Verdict::Redundant: return "Redundant";
    case Verdict::ExcludedPseudoreflection: return "ExcludedPseudoreflection";
    case Verdict::ManualReview: return "ManualReview";
    }
    return "?";
}

inline std::string to_string(CaseTag c) {
    switch (c) {
    case CaseTag::Case1: return "Case1";
    case CaseTag::Case2: return "Case2";
    case CaseTag::Case3: return "Case3";
    case CaseTag::Case4_Z2: return "Case4_Z2";
    case CaseTag::Case4_Z3: return "Case4_Z3";
    }
    return "?";
}

inline std::string to_string(NormalizerShape s) {
    switch (s) {
    case NormalizerShape::Dihedral: return "Dihedral";
    case NormalizerShape::DihedralTimesZ2: return "DihedralTimesZ2";
    case NormalizerShape::Cyclic2p: return "Cyclic2p";
    case NormalizerShape::Klein4: return "Klein4";
    case NormalizerShape::Cyclic3Extension: return "Cyclic3Extension";
    }
    return "?";
}

struct CaseMatch {
    CaseTag tag;
    NormalizerShape shape;

    bool operator==(const CaseMatch&) const = default;
};

/// The bigger locus (order q symmetry, same genus) that contains a matched locus.
/// When the datum is not determined, `dim` is a lower bound valid for every candidate.
struct ContainerLocus {
    int g;
    int q;
    std::optional<SmoothLocus> locus;
    int dim;
    bool exact;
    bool may_be_excluded; ///< some candidate is the genus-3 hyperelliptic locus

    std::string name() const {
        if (locus) return locus->name();
        return "M_{" + std::to_string(g) + ";" + std::to_string(q) + ",[?]}";
    }

    bool operator==(const ContainerLocus&) const = default;
};

struct ClassificationRecord {
    SmoothLocus locus;
    Verdict verdict;
    std::optional<CaseTag> case_tag;
    std::optional<ContainerLocus> container;
    std::optional<NormalizerShape> normalizer_shape;
    std::string note;

    bool operator==(const ClassificationRecord&) const = default;
};

/// The genus-3 hyperelliptic locus: its involution acts as a pseudoreflection.
constexpr bool is_excluded_pseudoreflection(int g, int d, int h, int k) {
    return g == 3 && d == 2 && h == 0 && k == 8;
}

inline bool is_excluded_pseudoreflection(const SmoothLocus& l) {
    return is_excluded_pseudoreflection(l.g, l.d, l.h, l.k);
}

namespace detail {

inline std::vector<int> scaled_sorted(const std::vector<int>& ms, int u, int p) {
    std::vector<int> out;
    out.reserve(ms.size());
    for (int m : ms) out.push_back(static_cast<int>(mod(static_cast<std::int64_t>(u) * m, p)));
    std::sort(out.begin(), out.end());
    return out;
}

inline void require_prime(int d) {
    if (!is_prime(d)) throw UsageError("order " + std::to_string(d) + " is not prime");
}

} // namespace detail

inline std::optional<CaseMatch> case_pattern(const SmoothLocus& l) {
    detail::require_prime(l.d);
    const int p = l.d;
    if (l.h == 2 && l.k == 0)
        return CaseMatch{CaseTag::Case1, p == 2 ? NormalizerShape::Klein4 : NormalizerShape::Dihedral};
    if (l.h == 1 && l.k == 2)
        return CaseMatch{CaseTag::Case2, p == 2 ? NormalizerShape::Klein4 : NormalizerShape::Dihedral};
    if (l.h != 0) return std::nullopt;

    const auto ms = l.datum.sequence().monodromies();
    if (l.k == 4) {
        if (detail::scaled_sorted(ms, p - 1, p) != ms) return std::nullopt;
        const bool two_values = std::count(ms.begin(), ms.end(), ms.front()) == 2 &&
                                std::count(ms.begin(), ms.end(), ms.back()) == 2 && ms.front() != ms.back();
        return CaseMatch{CaseTag::Case3, two_values ? NormalizerShape::DihedralTimesZ2 : NormalizerShape::Dihedral};
    }
    if (l.k != 3) return std::nullopt;
    if (ms[0] == ms[1] || ms[1] == ms[2]) return CaseMatch{CaseTag::Case4_Z2, NormalizerShape::Cyclic2p};
    if (p % 3 != 1) return std::nullopt;
    for (int m = 2; m < p; ++m) {
        if (mod(static_cast<std::int64_t>(m) * m * m, p) != 1) continue;
        const std::vector<int> base{1, m, static_cast<int>(mod(static_cast<std::int64_t>(m) * m, p))};
        for (int u : units(p))
            if (detail::scaled_sorted(base, u, p) == ms) return CaseMatch{CaseTag::Case4_Z3, NormalizerShape::Cyclic3Extension};
    }
    return std::nullopt;
}

inline ContainerLocus container_locus(const SmoothLocus& l, CaseTag tag) {
    detail::require_prime(l.d);
    const int p = l.d;
    auto full = [&](int k2) {
        auto c = locus(l.g, BranchingSequence(2, {k2}));
        return ContainerLocus{l.g, 2, c, c.dim, true, is_excluded_pseudoreflection(c)};
    };
    // The datum is unknown: bound by the smallest admissible (g, q) locus.
    auto partial = [&](int q) {
        const auto all = enumerate_admissible(l.g, q);
        if (all.empty()) throw std::logic_error("no order-" + std::to_string(q) + " locus in genus " + std::to_string(l.g));
        int lo = locus(l.g, all.front().datum).dim;
        for (const auto& a : all) lo = std::min(lo, locus(l.g, a.datum).dim);
        return ContainerLocus{l.g, q, std::nullopt, lo, false, l.g == 3 && q == 2};
    };

    switch (tag) {
    case CaseTag::Case1:
        if (p == 2) return full(4);
        return full(6);
    case CaseTag::Case2:
        if (p == 2) throw UsageError("Case2 with p = 2 forces genus 2");
        return full(4);
    case CaseTag::Case4_Z2: return full(p + 1);
    case CaseTag::Case3: return partial(2);
    case CaseTag::Case4_Z3: return partial(3);
    }
    throw std::logic_error("unknown case tag");
}

inline ClassificationRecord classify(const SmoothLocus& l) {
    if (l.g < 3) throw UsageError("classification needs genus >= 3, got " + std::to_string(l.g));
    detail::require_prime(l.d);
    ClassificationRecord rec{l, Verdict::Component, std::nullopt, std::nullopt, std::nullopt, ""};
    if (is_excluded_pseudoreflection(l)) {
        rec.verdict = Verdict::ExcludedPseudoreflection;
        rec.note = "generic automorphism is the hyperelliptic involution, a pseudoreflection";
        return rec;
    }
    auto match = case_pattern(l);
    if (!match) return rec;

    rec.case_tag = match->tag;
    rec.normalizer_shape = match->shape;
    rec.container = container_locus(l, match->tag);
    const auto& c = *rec.container;
    if (c.dim > l.dim && !c.may_be_excluded) {
        rec.verdict = Verdict::Redundant;
        rec.note = std::string("properly contained in ") + c.name() + (c.exact ? " of dimension " : " of dimension >= ") +
                   std::to_string(c.dim);
    } else {
        rec.verdict = Verdict::ManualReview;
        if (c.may_be_excluded)
            rec.note = "only container is the genus-3 hyperelliptic locus, which is not itself a component";
        else
            rec.note = "container dimension " + std::to_string(c.dim) + " does not exceed " + std::to_string(l.dim);
    }
    if (rec.verdict == Verdict::Redundant && !(c.dim > l.dim)) throw std::logic_error("redundant without strict containment");
    return rec;
}

/// Largest prime order that can act on a smooth curve of genus g.
constexpr int prime_order_bound(int g) { return 2 * g + 1; }

struct SmoothDecomposition {
    int g;
    std::vector<ClassificationRecord> components;
    std::vector<ClassificationRecord> redundant;
    std::vector<ClassificationRecord> excluded;
    std::vector<ClassificationRecord> manual_review;

    bool operator==(const SmoothDecomposition&) const = default;
};

inline SmoothDecomposition decompose_sing(int g) {
    if (g < 3) throw UsageError("the singular-locus decomposition needs genus >= 3 (genus 2 is out of scope), got " +
                                std::to_string(g));
    int beyond = prime_order_bound(g) + 1;
    while (!is_prime(beyond)) ++beyond;
    if (!enumerate_admissible(g, beyond).empty())
        throw std::logic_error("prime order bound violated at p=" + std::to_string(beyond));

    SmoothDecomposition out{g, {}, {}, {}, {}};
    for (int p : primes_up_to(prime_order_bound(g))) {
        for (const auto& a : enumerate_admissible(g, p)) {
            auto rec = classify(locus(g, a.datum));
            switch (rec.verdict) {
            case Verdict::Component: out.components.push_back(std::move(rec)); break;
            case Verdict::Redundant: out.redundant.push_back(std::move(rec)); break;
            case Verdict::ExcludedPseudoreflection: out.excluded.push_back(std::move(rec)); break;
            case Verdict::ManualReview: out.manual_review.push_back(std::move(rec)); break;
            }
        }
    }
    return out;
}

} // namespace cycov
