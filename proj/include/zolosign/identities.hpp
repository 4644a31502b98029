#pragma once

#include <cstdint>

#include "zolosign/modmath.hpp"
#include "zolosign/perm.hpp"
#include "zolosign/zperms.hpp"

/// Direct checkers for the intermediate floor-sum identities behind the
/// half-range sign theorem. Each checker recomputes both sides of one
/// identity and reports them as a witness; the verification campaigns sweep
/// these over exhaustive ranges.
///
/// Congruences mod 2 are compared through the mathematical (nonnegative)
/// remainder: several right-hand sides contain (1-a)(n^2-1)/8 and go
/// negative for a > 1.
namespace zolosign {

/// A (k, l) constraint was violated (need 1 <= l < k <= (n-1)/2).
struct RangeError : Error {
    using Error::Error;
};

/// Both sides of one per-pair identity, as evaluated.
struct PairWitness {
    std::int64_t k = 0;
    std::int64_t l = 0;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool holds = false;
};

/// Both sides of one summed identity.
struct SumWitness {
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool holds = false;
};

namespace detail {

inline std::int64_t parity(std::int64_t x) { return ((x % 2) + 2) % 2; }

inline void require_pair_range(const OddModulus& n, std::int64_t k, std::int64_t l) {
    if (!(1 <= l && l < k && k <= n.half()))
        throw RangeError("pair out of range: need 1 <= l < k <= (n-1)/2");
}

}  // namespace detail

/// floor(ak/n) - floor(al/n) - floor(a(k-l)/n): equals 1 when
/// {ak}_n < {al}_n and 0 when {ak}_n > {al}_n. Ties are impossible for a
/// unit with k != l.
inline PairWitness lemma1_eq1(const UnitResidue& a, std::int64_t k, std::int64_t l) {
    const std::int64_t n = a.modulus().value();
    detail::require_pair_range(a.modulus(), k, l);
    const std::int64_t av = a.value();
    std::int64_t lhs = av * k / n - av * l / n - av * (k - l) / n;
    std::int64_t rhs = (av * k % n < av * l % n) ? 1 : 0;
    return {k, l, lhs, rhs, lhs == rhs};
}

/// floor(a(k+l)/n) - floor(ak/n) - floor(al/n): equals 1 when
/// {ak}_n + {al}_n > n, else 0. The sum can never hit n exactly since
/// a(k+l) is a unit multiple of something below n.
inline PairWitness lemma1_eq2(const UnitResidue& a, std::int64_t k, std::int64_t l) {
    const std::int64_t n = a.modulus().value();
    detail::require_pair_range(a.modulus(), k, l);
    const std::int64_t av = a.value();
    std::int64_t lhs = av * (k + l) / n - av * k / n - av * l / n;
    std::int64_t rhs = (av * k % n + av * l % n > n) ? 1 : 0;
    return {k, l, lhs, rhs, lhs == rhs};
}

/// Per-pair inversion congruence: the inversion indicator
/// eps = [gamma(l) > gamma(k)] matches floor(a(k+l)/n) + floor(a(k-l)/n)
/// mod 2. `gamma` must be gamma_half(a); the overload below builds it.
inline PairWitness lemma2_pair(const Permutation& gamma, const UnitResidue& a, std::int64_t k,
                               std::int64_t l) {
    const std::int64_t n = a.modulus().value();
    detail::require_pair_range(a.modulus(), k, l);
    const std::int64_t av = a.value();
    std::int64_t eps = gamma(l) > gamma(k) ? 1 : 0;
    std::int64_t rhs = detail::parity(av * (k + l) / n + av * (k - l) / n);
    return {k, l, eps, rhs, eps == rhs};
}

inline PairWitness lemma2_pair(const UnitResidue& a, std::int64_t k, std::int64_t l) {
    return lemma2_pair(gamma_half(a), a, k, l);
}

/// Summed form of the inversion congruence: the inversion count I(a,n) of
/// gamma_half matches the double floor sum mod 2.
inline SumWitness lemma2_sum(const Permutation& gamma, const UnitResidue& a) {
    const std::int64_t n = a.modulus().value();
    const std::int64_t av = a.value();
    std::int64_t lhs = static_cast<std::int64_t>(sign_by_inversions(gamma).inversions);
    std::int64_t rhs = 0;
    for (std::int64_t k = 2; k <= a.modulus().half(); ++k)
        for (std::int64_t l = 1; l < k; ++l) rhs += av * (k + l) / n + av * (k - l) / n;
    return {lhs, rhs, detail::parity(lhs) == detail::parity(rhs)};
}

inline SumWitness lemma2_sum(const UnitResidue& a) { return lemma2_sum(gamma_half(a), a); }

/// Endpoint congruence of the main derivation:
/// I(a,n) = (1-a)(n^2-1)/8 + ((n-1)/2) sum floor(2ak/n) - sum floor(ak/n)
/// (mod 2), both sums over k = 1..(n-1)/2.
inline SumWitness theorem1_congruence(const Permutation& gamma, const UnitResidue& a) {
    const std::int64_t n = a.modulus().value();
    const std::int64_t av = a.value();
    std::int64_t lhs = static_cast<std::int64_t>(sign_by_inversions(gamma).inversions);
    std::int64_t sum2 = 0, sum1 = 0;
    for (std::int64_t k = 1; k <= a.modulus().half(); ++k) {
        sum2 += 2 * av * k / n;
        sum1 += av * k / n;
    }
    std::int64_t rhs = detail::checked_mul(1 - av, (n * n - 1) / 8);
    rhs = detail::checked_add(rhs, detail::checked_mul(a.modulus().half(), sum2));
    rhs -= sum1;
    return {lhs, rhs, detail::parity(lhs) == detail::parity(rhs)};
}

inline SumWitness theorem1_congruence(const UnitResidue& a) {
    return theorem1_congruence(gamma_half(a), a);
}

/// Full-range floor sum: sum_{h=1}^{n-1} floor(ah/n) = (a-1)(n-1)/2, exact.
inline SumWitness fullsum_identity(const UnitResidue& a) {
    const std::int64_t n = a.modulus().value();
    const std::int64_t av = a.value();
    std::int64_t lhs = 0;
    for (std::int64_t h = 1; h <= n - 1; ++h) lhs += av * h / n;
    std::int64_t rhs = (av - 1) * (n - 1) / 2;
    return {lhs, rhs, lhs == rhs};
}

}  // namespace zolosign
