#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/// Exact elementary number theory on 64-bit integers: canonical residues,
/// floor division, trial-division factorization and Euler's phi. Everything
/// else in the library is built on top of these.
///
/// All routines are plain functions of their arguments; the value types are
/// immutable after construction and safe to share across threads.
namespace zolosign {

/// Desk-scale ceiling for moduli. Chosen so that every intermediate product
/// the library forms (a*(k+l) <= n^2, exponent sums bounded by n^3) stays
/// comfortably inside int64_t.
inline constexpr std::int64_t kMaxModulus = 1'000'000;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// gcd(x, n) > 1 where a unit was required; the Jacobi symbol is 0 there and
/// the multiplication permutations are undefined.
struct NotAUnitError : Error {
    using Error::Error;
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
#ifndef NDEBUG
    std::int64_t r = 0;
    assert(!__builtin_mul_overflow(a, b, &r) && "integer overflow");
    return r;
#else
    return a * b;
#endif
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
#ifndef NDEBUG
    std::int64_t r = 0;
    assert(!__builtin_add_overflow(a, b, &r) && "integer overflow");
    return r;
#else
    return a + b;
#endif
}

}  // namespace detail

/// The least nonnegative residue of x modulo n, in [0, n-1]. Works for any
/// integer x, negative included.
inline std::int64_t least_nonneg_residue(std::int64_t x, std::int64_t n) {
    assert(n > 0);
    std::int64_t r = x % n;
    return r < 0 ? r + n : r;
}

/// Floor of a/n for positive n. Rounds toward minus infinity, never toward
/// zero: floor_div(-3, 7) == -1.
inline std::int64_t floor_div(std::int64_t a, std::int64_t n) {
    assert(n > 0);
    std::int64_t q = a / n;
    if (a % n != 0 && a < 0) --q;
    return q;
}

struct PrimePower {
    std::int64_t prime = 0;
    int exponent = 0;

    std::int64_t value() const {
        std::int64_t v = 1;
        for (int i = 0; i < exponent; ++i) v = detail::checked_mul(v, prime);
        return v;
    }

    bool operator==(const PrimePower&) const = default;
};

/// Prime factorization by trial division, primes ascending. Exact for any
/// n >= 2 we care about (the modulus bound keeps inputs small).
inline std::vector<PrimePower> factorize(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
    std::vector<PrimePower> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
        if (n % p == 0) return false;
    return true;
}

/// Euler's totient, computed from the factorization.
inline std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
    if (n == 1) return 1;
    std::int64_t phi = 1;
    for (const auto& pp : factorize(n)) {
        std::int64_t q = pp.value();
        phi = detail::checked_mul(phi, q - q / pp.prime);
    }
    return phi;
}

/// b^e mod n by binary exponentiation. Requires n <= kMaxModulus so the
/// intermediate products fit in 64 bits.
inline std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t n) {
    assert(n > 0 && e >= 0);
    std::int64_t r = 1;
    b = least_nonneg_residue(b, n);
    while (e > 0) {
        if (e & 1) r = r * b % n;
        b = b * b % n;
        e >>= 1;
    }
    return r;
}

/// A validated odd modulus n >= 3 with its factorization cached.
class OddModulus {
public:
    explicit OddModulus(std::int64_t n) : n_(n) {
        if (n < 3 || n % 2 == 0)
            throw std::invalid_argument("OddModulus: n must be odd and >= 3, got " +
                                        std::to_string(n));
        factorization_ = factorize(n);
    }

    std::int64_t value() const { return n_; }
    const std::vector<PrimePower>& factorization() const { return factorization_; }

    /// (n-1)/2, the top of the permuted half range.
    std::int64_t half() const { return (n_ - 1) / 2; }

    bool prime() const {
        return factorization_.size() == 1 && factorization_[0].exponent == 1;
    }
    bool prime_power() const { return factorization_.size() == 1; }

    bool operator==(const OddModulus& other) const { return n_ == other.n_; }

private:
    std::int64_t n_;
    std::vector<PrimePower> factorization_;
};

/// A canonical residue a in [1, n-1] with gcd(a, n) = 1, bound to its
/// modulus. Construction canonicalizes any integer (negatives included) and
/// rejects non-units.
class UnitResidue {
public:
    UnitResidue(std::int64_t x, OddModulus modulus)
        : a_(least_nonneg_residue(x, modulus.value())), modulus_(std::move(modulus)) {
        if (std::gcd(a_, modulus_.value()) != 1)
            throw NotAUnitError("not a unit: gcd(" + std::to_string(x) + ", " +
                                std::to_string(modulus_.value()) + ") > 1");
    }

    std::int64_t value() const { return a_; }
    const OddModulus& modulus() const { return modulus_; }

    bool operator==(const UnitResidue& other) const {
        return a_ == other.a_ && modulus_ == other.modulus_;
    }

private:
    std::int64_t a_;
    OddModulus modulus_;
};

/// Canonical unit representative of x mod n. Throws NotAUnitError when
/// gcd(x, n) > 1.
inline UnitResidue make_unit(std::int64_t x, const OddModulus& n) {
    return UnitResidue(x, n);
}

}  // namespace zolosign
