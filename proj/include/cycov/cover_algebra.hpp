#pragma once

// Cyclic covers z^d = prod delta_i^i over a factorial base, at the level of
// divisor-class bookkeeping: exponent normalization, the character classes
// L_chi, multiplication sections and the irreducibility criterion.

#include <cycov/arithmetic.hpp>
#include <cycov/error.hpp>

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cycov {

/// Element of Z^r + Z/t_1 + ... + Z/t_s, torsion residues reduced.
struct DivisorClass {
    std::vector<std::int64_t> free_part;
    std::vector<std::int64_t> torsion_part;

    bool operator==(const DivisorClass&) const = default;
};

/// Finitely generated abelian group standing in for a Picard group: Z^r + Z/t_1 + ... with t_1 | t_2 | ...
class PicardModel {
public:
    PicardModel(int free_rank, std::vector<std::int64_t> torsion_factors)
        : free_rank_(free_rank), torsion_(std::move(torsion_factors)) {
        if (free_rank_ < 0) throw UsageError("free rank must be non-negative");
        for (std::size_t i = 0; i < torsion_.size(); ++i) {
            if (torsion_[i] < 2)
                throw ConstraintViolation("torsion-factor", "torsion factors must be >= 2, got " +
                                                                std::to_string(torsion_[i]));
            if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
                throw ConstraintViolation("divisibility-chain", std::to_string(torsion_[i - 1]) + " does not divide " +
                                                                    std::to_string(torsion_[i]));
        }
    }

    int free_rank() const noexcept { return free_rank_; }
    const std::vector<std::int64_t>& torsion_factors() const noexcept { return torsion_; }

    DivisorClass zero() const {
        return {std::vector<std::int64_t>(free_rank_, 0), std::vector<std::int64_t>(torsion_.size(), 0)};
    }

    /// Checked constructor; reduces torsion residues.
    DivisorClass element(std::vector<std::int64_t> free_part, std::vector<std::int64_t> torsion_part) const {
        DivisorClass c{std::move(free_part), std::move(torsion_part)};
        if (!has_shape(c))
            throw ConstraintViolation("class-shape", "divisor class does not match the Picard model's shape");
        return reduce(std::move(c));
    }

    bool has_shape(const DivisorClass& c) const {
        return static_cast<int>(c.free_part.size()) == free_rank_ && c.torsion_part.size() == torsion_.size();
    }

    DivisorClass reduce(DivisorClass c) const {
        for (std::size_t i = 0; i < torsion_.size(); ++i) c.torsion_part[i] = mod(c.torsion_part[i], torsion_[i]);
        return c;
    }

    DivisorClass add(const DivisorClass& a, const DivisorClass& b) const {
        DivisorClass c = a;
        for (std::size_t i = 0; i < c.free_part.size(); ++i) c.free_part[i] += b.free_part[i];
        for (std::size_t i = 0; i < c.torsion_part.size(); ++i) c.torsion_part[i] += b.torsion_part[i];
        return reduce(std::move(c));
    }

    DivisorClass scale(std::int64_t n, const DivisorClass& a) const {
        DivisorClass c = a;
        for (auto& x : c.free_part) x *= n;
        for (auto& x : c.torsion_part) x *= n;
        return reduce(std::move(c));
    }

    DivisorClass subtract(const DivisorClass& a, const DivisorClass& b) const { return add(a, scale(-1, b)); }

    /// Exact order; nullopt for infinite order.
    std::optional<std::int64_t> order(const DivisorClass& c) const {
        for (auto x : c.free_part)
            if (x != 0) return std::nullopt;
        std::int64_t o = 1;
        for (std::size_t i = 0; i < torsion_.size(); ++i)
            o = std::lcm(o, torsion_[i] / std::gcd(torsion_[i], c.torsion_part[i]));
        return o;
    }

    bool operator==(const PicardModel&) const = default;

private:
    int free_rank_;
    std::vector<std::int64_t> torsion_;
};

/// Exponents of the prime factors of f in w^d = f: positive for numerator
/// primes, negative for denominator primes.
struct RootDatum {
    int d;
    std::map<std::string, std::int64_t> factors;
};

/// Groups the prime factors by reduced exponent: residue i -> symbols of D_i.
/// Exponents divisible by d are absorbed into the new fibre coordinate and dropped.
inline std::map<int, std::set<std::string>> normalize_root(const RootDatum& rd) {
    if (rd.d < 2) throw UsageError("cover order must be >= 2");
    std::map<int, std::set<std::string>> out;
    for (const auto& [symbol, e] : rd.factors) {
        if (e == 0) throw ConstraintViolation("exponent-nonzero", "factor " + symbol + " has exponent 0");
        const auto r = static_cast<int>(mod(e, rd.d));
        if (r != 0) out[r].insert(symbol);
    }
    return out;
}

/// 1 iff a + b overflows d, for residues a, b in {0..d-1}: a + b = (a+b mod d) + carry*d.
constexpr int carry(int d, int a, int b) { return a + b >= d ? 1 : 0; }

/// Exponent vector (indexed by i = 1..d-1, stored at i-1) of the section prod_i delta_i^{eps^i_{chi,xi}}.
inline std::vector<int> mult_section_exponents(int d, int chi, int xi) {
    if (chi < 0 || chi >= d || xi < 0 || xi >= d) throw UsageError("characters must lie in 0..d-1");
    std::vector<int> out(d - 1);
    for (int i = 1; i < d; ++i)
        out[i - 1] = carry(d, static_cast<int>(mod(static_cast<std::int64_t>(chi) * i, d)),
                           static_cast<int>(mod(static_cast<std::int64_t>(xi) * i, d)));
    return out;
}

struct PrimeDivisor {
    std::string symbol;
    DivisorClass cls;

    bool operator==(const PrimeDivisor&) const = default;
};

/// Branch divisors D_1..D_{d-1} (as sets of classed prime symbols) and the class L.
struct BranchAssignment {
    int d;
    PicardModel picard;
    std::map<int, std::vector<PrimeDivisor>> divisors;
    DivisorClass L;

    /// [D_i] for a residue i (zero when D_i is empty).
    DivisorClass divisor_class(int residue) const {
        DivisorClass c = picard.zero();
        if (auto it = divisors.find(residue); it != divisors.end())
            for (const auto& p : it->second) c = picard.add(c, p.cls);
        return c;
    }

    bool nonempty(int residue) const {
        auto it = divisors.find(residue);
        return it != divisors.end() && !it->second.empty();
    }

    /// Residues i with D_i nonempty, ascending.
    std::vector<int> support() const {
        std::vector<int> out;
        for (const auto& [i, ps] : divisors)
            if (!ps.empty()) out.push_back(i);
        return out;
    }

    bool operator==(const BranchAssignment&) const = default;
};

/// Structural checks plus the linear equivalence d*L = sum_i i*[D_i].
inline std::vector<Violation> check_assignment(const BranchAssignment& ba) {
    std::vector<Violation> out;
    if (ba.d < 2) {
        out.push_back({"order", "cover order must be >= 2"});
        return out;
    }
    if (!ba.picard.has_shape(ba.L)) out.push_back({"class-shape", "L does not match the Picard model"});
    std::set<std::string> symbols;
    for (const auto& [i, ps] : ba.divisors) {
        if (i < 1 || i >= ba.d) out.push_back({"residue-range", "residue " + std::to_string(i) + " not in 1..d-1"});
        for (const auto& p : ps) {
            if (!symbols.insert(p.symbol).second)
                out.push_back({"common-components", "prime " + p.symbol + " appears in two branch divisors"});
            if (!ba.picard.has_shape(p.cls))
                out.push_back({"class-shape", "class of " + p.symbol + " does not match the Picard model"});
        }
    }
    if (!out.empty()) return out;

    DivisorClass rhs = ba.picard.zero();
    for (const auto& [i, ps] : ba.divisors) rhs = ba.picard.add(rhs, ba.picard.scale(i, ba.divisor_class(i)));
    if (ba.picard.scale(ba.d, ba.L) != rhs)
        out.push_back({"linear-equivalence", "d*L is not linearly equivalent to sum_i i*D_i"});
    return out;
}

inline void require_valid(const BranchAssignment& ba) {
    if (auto v = check_assignment(ba); !v.empty()) throw ConstraintViolation(std::move(v));
}

/// L_chi via L_0 = 0, L_1 = L and L_{chi+1} = L_chi + L - sum_i eps^i_{chi,1} [D_i].
inline DivisorClass l_chi(const BranchAssignment& ba, int chi) {
    if (chi < 0 || chi >= ba.d) throw UsageError("character " + std::to_string(chi) + " out of range 0..d-1");
    require_valid(ba);
    const auto& pic = ba.picard;
    DivisorClass current = pic.zero();
    for (int c = 0; c < chi; ++c) {
        DivisorClass next = pic.add(current, ba.L);
        const auto eps = mult_section_exponents(ba.d, c, 1);
        for (int i = 1; i < ba.d; ++i)
            if (eps[i - 1]) next = pic.subtract(next, ba.divisor_class(i));
        current = std::move(next);
    }
    return current;
}

struct IrreducibilityWitness {
    bool irreducible;
    int m;                              ///< index of the subgroup generated by the inertia
    DivisorClass etale_class;           ///< L' = (d/m) L - sum (i/m) D_i (zero class when m = 1)
    std::optional<std::int64_t> order;  ///< order of L' (always finite for valid input)
};

/// Irreducible iff m = 1, or the etale class L' has order exactly m.
inline IrreducibilityWitness is_irreducible(const BranchAssignment& ba) {
    require_valid(ba);
    const auto& pic = ba.picard;
    const int m = generated_index(ba.d, ba.support());
    if (m == 1) return {true, 1, pic.zero(), 1};
    DivisorClass lp = pic.scale(ba.d / m, ba.L);
    for (int i : ba.support()) lp = pic.subtract(lp, pic.scale(i / m, ba.divisor_class(i)));
    const auto ord = pic.order(lp);
    return {ord && *ord == m, m, lp, ord};
}

/// Number of connected components of a Z/d cover whose monodromy group is generated
/// by the local monodromies and the index-`etale_index` subgroup coming from the
/// unramified part: d / |H|.
inline int component_count_oracle(int d, const std::vector<int>& monodromy_images, int etale_index) {
    if (d < 1 || etale_index < 1 || d % etale_index != 0) throw UsageError("etale_index must divide d");
    std::vector<char> in(d, 0);
    in[0] = 1;
    // Close {0} under adding generators; brute force on the cyclic group.
    std::vector<int> gens(monodromy_images);
    gens.push_back(etale_index);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < d; ++x) {
            if (!in[x]) continue;
            for (int gen : gens) {
                const auto y = static_cast<int>(mod(x + gen, d));
                if (!in[y]) in[y] = 1, grew = true;
            }
        }
    }
    int size = 0;
    for (char c : in) size += c;
    return d / size;
}

} // namespace cycov
