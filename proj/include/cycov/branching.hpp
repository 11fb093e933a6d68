#pragma once

// Branching sequences and data of cyclic covers C -> C' = C/G of smooth curves,
// G = Z/d: Hurwitz admissibility, orbit canonicalization under (Z/d)^*,
// enumeration and the dimension/codimension of the resulting loci in M_g.

#include <cycov/arithmetic.hpp>
#include <cycov/error.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycov {

class BranchingSequence;
class BranchingDatum;
inline BranchingDatum canonical_datum(const BranchingSequence& seq);

/// Counts (k_1, ..., k_{d-1}): k_i branch points with local monodromy i.
class BranchingSequence {
public:
    BranchingSequence(int d, std::vector<int> counts) : d_(d), counts_(std::move(counts)) {
        if (d_ < 2) throw UsageError("cover order must be >= 2, got " + std::to_string(d_));
        if (static_cast<int>(counts_.size()) != d_ - 1)
            throw ConstraintViolation("sequence-length", "expected " + std::to_string(d_ - 1) +
                                                             " counts for d=" + std::to_string(d_) + ", got " +
                                                             std::to_string(counts_.size()));
        for (int k : counts_)
            if (k < 0) throw ConstraintViolation("count-nonnegative", "negative branch count " + std::to_string(k));
    }

    /// Sequence whose residue i occurs as often as i appears in `monodromies`.
    static BranchingSequence from_monodromies(int d, const std::vector<int>& monodromies) {
        if (d < 2) throw UsageError("cover order must be >= 2");
        std::vector<int> counts(d - 1, 0);
        for (int m : monodromies) {
            const auto r = static_cast<int>(mod(m, d));
            if (r == 0) throw ConstraintViolation("monodromy-nonzero", "local monodromy 0 is not a branch point");
            ++counts[r - 1];
        }
        return {d, std::move(counts)};
    }

    int order() const noexcept { return d_; }
    const std::vector<int>& counts() const noexcept { return counts_; }

    /// k_i for a residue i in 1..d-1.
    int count(int residue) const { return counts_.at(residue - 1); }

    int total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

    /// Sorted multiset of local monodromies (residue i repeated k_i times).
    std::vector<int> monodromies() const {
        std::vector<int> out;
        for (int i = 1; i < d_; ++i) out.insert(out.end(), counts_[i - 1], i);
        return out;
    }

    /// Re-identification of G with Z/d through the unit r: k'_{r*i mod d} = k_i.
    BranchingSequence act(int unit) const {
        std::vector<int> out(d_ - 1, 0);
        for (int i = 1; i < d_; ++i) out[mod(static_cast<std::int64_t>(unit) * i, d_) - 1] = counts_[i - 1];
        return {d_, std::move(out)};
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < counts_.size(); ++i) s += (i ? "," : "") + std::to_string(counts_[i]);
        return s + ")";
    }

    bool operator==(const BranchingSequence&) const = default;
    auto operator<=>(const BranchingSequence&) const = default;

private:
    int d_;
    std::vector<int> counts_;
};

/// Condition (*): sum_i i*k_i == 0 mod d.
inline bool check_star(const BranchingSequence& seq) {
    std::int64_t s = 0;
    for (int i = 1; i < seq.order(); ++i) s += static_cast<std::int64_t>(i) * seq.count(i);
    return mod(s, seq.order()) == 0;
}

namespace detail {

/// sum_i k_i (d - gcd(i, d)): twice-d-scaled ramification of the Hurwitz formula.
inline std::int64_t ramification_weight(const BranchingSequence& seq) {
    std::int64_t s = 0;
    const int d = seq.order();
    for (int i = 1; i < d; ++i) s += static_cast<std::int64_t>(seq.count(i)) * (d - std::gcd(i, d));
    return s;
}

/// h with 2d*h = 2d + 2(g-1) - sum k_i (d - gcd(i,d)), when that is a non-negative integer.
inline std::optional<int> hurwitz_quotient_genus(std::int64_t g, const BranchingSequence& seq) {
    const std::int64_t d = seq.order();
    const std::int64_t numer = 2 * d + 2 * (g - 1) - ramification_weight(seq);
    if (numer < 0 || numer % (2 * d) != 0) return std::nullopt;
    return static_cast<int>(numer / (2 * d));
}

} // namespace detail

/// Genus of C' from Hurwitz, exact; nullopt unless it is a non-negative integer.
inline std::optional<int> quotient_genus(int g, const BranchingSequence& seq) {
    if (g < 2) throw UsageError("covering genus must be >= 2, got " + std::to_string(g));
    return detail::hurwitz_quotient_genus(g, seq);
}

/// Forward Hurwitz: the genus g with 2(g-1) = d(2(h-1)) + sum k_i (d - gcd(i,d)), if integral.
inline std::optional<int> covering_genus(int h, const BranchingSequence& seq) {
    const std::int64_t twice = 2 * static_cast<std::int64_t>(seq.order()) * (h - 1) + detail::ramification_weight(seq);
    if (twice % 2 != 0) return std::nullopt;
    return static_cast<int>(twice / 2 + 1);
}

/// Index m of the subgroup generated by the occurring monodromies (m = d for an etale cover).
inline int monodromy_index(const BranchingSequence& seq) {
    std::vector<int> present;
    for (int i = 1; i < seq.order(); ++i)
        if (seq.count(i) != 0) present.push_back(i);
    return generated_index(seq.order(), present);
}

struct Admissibility {
    bool admissible = false;
    std::optional<int> h;
    std::string failure; ///< empty when admissible

    explicit operator bool() const noexcept { return admissible; }
};

/// Condition (*), integral h >= 0, and the etale part: m = 1 or h >= 1
/// (a genus-0 base has no torsion line bundles, so a Z/m etale layer cannot exist).
inline Admissibility is_admissible(int g, const BranchingSequence& seq) {
    if (g < 2) throw UsageError("covering genus must be >= 2, got " + std::to_string(g));
    Admissibility out;
    if (!check_star(seq)) {
        out.failure = "condition (*) fails: sum i*k_i is not divisible by d";
        return out;
    }
    out.h = quotient_genus(g, seq);
    if (!out.h) {
        out.failure = "Hurwitz quotient genus is not a non-negative integer";
        return out;
    }
    if (monodromy_index(seq) != 1 && *out.h == 0) {
        out.failure = "monodromy does not generate Z/d and the quotient is rational";
        return out;
    }
    out.admissible = true;
    return out;
}

/// Orbit representative of a branching sequence under the unit-group index action.
class BranchingDatum {
public:
    int order() const noexcept { return canonical_.order(); }
    const BranchingSequence& sequence() const noexcept { return canonical_; }
    std::string to_string() const { return "[" + canonical_.to_string() + "]"; }

    bool operator==(const BranchingDatum&) const = default;
    auto operator<=>(const BranchingDatum&) const = default;

private:
    explicit BranchingDatum(BranchingSequence s) : canonical_(std::move(s)) {}
    friend BranchingDatum canonical_datum(const BranchingSequence& seq);

    BranchingSequence canonical_;
};

namespace detail {

/// Colex order: compare k_{d-1} first, then k_{d-2}, ... down to k_1.
inline bool colex_less(const BranchingSequence& a, const BranchingSequence& b) {
    return std::lexicographical_compare(a.counts().rbegin(), a.counts().rend(), b.counts().rbegin(),
                                        b.counts().rend());
}

} // namespace detail

/// Canonical orbit representative: the colex-least sequence of the (Z/d)^* orbit,
/// i.e. as few branch points as possible at the highest residues. For d=3 this
/// picks (3,0) over (0,3); for d=5 it picks (1,2,0,0) in its four-element orbit.
inline BranchingDatum canonical_datum(const BranchingSequence& seq) {
    BranchingSequence best = seq;
    for (int r : units(seq.order())) {
        BranchingSequence cand = seq.act(r);
        if (detail::colex_less(cand, best)) best = std::move(cand);
    }
    return BranchingDatum(std::move(best));
}

struct AdmissibleDatum {
    BranchingDatum datum;
    int h;

    bool operator==(const AdmissibleDatum&) const = default;
};

/// Upper bound on the branch-point count k for genus g and order d (each point adds >= 1 to 2(g-1) + 2d).
constexpr int branch_count_bound(int g, int d) { return 2 * (g - 1) + 2 * d; }

/// All admissible data for (g, d), one per orbit, sorted by canonical counts.
inline std::vector<AdmissibleDatum> enumerate_admissible(int g, int d) {
    if (g < 2) throw UsageError("covering genus must be >= 2, got " + std::to_string(g));
    if (d < 2) throw UsageError("cover order must be >= 2, got " + std::to_string(d));

    // Depth-first over residues with the exact Hurwitz budget 2(g-1) + 2d.
    const std::int64_t budget = 2 * static_cast<std::int64_t>(g - 1) + 2 * d;
    std::vector<int> weight(d);
    for (int i = 1; i < d; ++i) weight[i] = d - std::gcd(i, d);

    std::set<BranchingDatum> seen;
    std::vector<AdmissibleDatum> out;
    std::vector<int> counts(d - 1, 0);

    auto visit = [&](auto&& self, int residue, std::int64_t used) -> void {
        if (residue == d) {
            if ((budget - used) % (2 * d) != 0) return;
            BranchingSequence seq(d, counts);
            auto adm = is_admissible(g, seq);
            if (!adm) return;
            if (seq.total() > branch_count_bound(g, d))
                throw std::logic_error("admissible datum exceeds the branch-count bound");
            auto datum = canonical_datum(seq);
            if (seen.insert(datum).second) out.push_back({datum, *adm.h});
            return;
        }
        for (int k = 0; used + static_cast<std::int64_t>(k) * weight[residue] <= budget; ++k) {
            counts[residue - 1] = k;
            self(self, residue + 1, used + static_cast<std::int64_t>(k) * weight[residue]);
        }
        counts[residue - 1] = 0;
    };
    visit(visit, 1, 0);

    std::sort(out.begin(), out.end(), [](const AdmissibleDatum& a, const AdmissibleDatum& b) {
        return a.datum.sequence().counts() < b.datum.sequence().counts();
    });
    return out;
}

/// The numerical type (g, d, datum) with its quotient genus and the locus dimensions.
struct SmoothLocus {
    int g;
    int d;
    BranchingDatum datum;
    int h;
    int k;
    int dim;   ///< 3(h-1) + k
    int codim; ///< 3(g-1) - dim

    std::string name() const {
        return "M_{" + std::to_string(g) + ";" + std::to_string(d) + "," + datum.to_string() + "}";
    }

    bool operator==(const SmoothLocus&) const = default;
};

/// Closed codimension formula for prime order, doubled to stay integral:
/// 2c = 6(p-1)(h-1) + k(3(p-1) - 2).
constexpr std::int64_t twice_prime_codimension(std::int64_t p, std::int64_t h, std::int64_t k) {
    return 6 * (p - 1) * (h - 1) + k * (3 * (p - 1) - 2);
}

inline SmoothLocus locus(int g, const BranchingDatum& datum) {
    const auto& seq = datum.sequence();
    auto adm = is_admissible(g, seq);
    if (!adm)
        throw ConstraintViolation("inadmissible-datum", datum.to_string() + " for g=" + std::to_string(g) + ": " +
                                                            adm.failure);
    SmoothLocus out{g, seq.order(), datum, *adm.h, seq.total(), 0, 0};
    out.dim = 3 * (out.h - 1) + out.k;
    out.codim = 3 * (g - 1) - out.dim;
    if (is_prime(out.d) && 2 * static_cast<std::int64_t>(out.codim) != twice_prime_codimension(out.d, out.h, out.k))
        throw std::logic_error("codimension formulas disagree for " + out.name());
    return out;
}

inline SmoothLocus locus(int g, const BranchingSequence& seq) { return locus(g, canonical_datum(seq)); }

enum class MaximalCyclicException { None, Case1, Case2, Case3 };

/// Quotient types (h, k) where G need not be a maximal cyclic automorphism group of the general member.
constexpr MaximalCyclicException maximal_cyclic_exception(int h, int k) {
    if (h == 2 && k == 0) return MaximalCyclicException::Case1;
    if (h == 1 && k == 2) return MaximalCyclicException::Case2;
    if (h == 0 && (k == 3 || k == 4)) return MaximalCyclicException::Case3;
    return MaximalCyclicException::None;
}

inline std::string to_string(MaximalCyclicException e) {
    switch (e) {
    case MaximalCyclicException::None: return "none";
    case MaximalCyclicException::Case1: return "case1";
    case MaximalCyclicException::Case2: return "case2";
    case MaximalCyclicException::Case3: return "case3";
    }
    return "?";
}

} // namespace cycov
