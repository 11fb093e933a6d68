#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace cycov {

/// Representative of a mod m in {0, ..., m-1}, also for negative a.
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

constexpr bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

inline std::vector<int> primes_up_to(int n) {
    std::vector<int> out;
    for (int p = 2; p <= n; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

/// The unit group (Z/d)^*, ascending.
inline std::vector<int> units(int d) {
    std::vector<int> out;
    for (int r = 1; r < d; ++r)
        if (std::gcd(r, d) == 1) out.push_back(r);
    if (d == 1) out.push_back(0);
    return out;
}

/// Index of the subgroup of Z/d generated by the given residues (d when empty).
template <typename Range>
int generated_index(int d, const Range& residues) {
    int m = d;
    for (int i : residues) m = std::gcd(m, static_cast<int>(mod(i, d)));
    return m;
}

} // namespace cycov
