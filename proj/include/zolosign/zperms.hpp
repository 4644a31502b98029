#pragma once

#include <cstdint>
#include <vector>

#include "zolosign/modmath.hpp"
#include "zolosign/perm.hpp"

/// Constructors for the multiplication permutations and Gauss sets of an odd
/// modulus n and a unit a:
///
///   sigma           x -> {ax}_n                    on {0, ..., n-1}
///   gamma_half      the folded map                 on {1, ..., (n-1)/2}
///   gamma_full      gamma_half extended by fixes   on {0, ..., n-1}
///   gamma_prime     the mirrored upper-half map    on {0, ..., n-1}
///   gauss sets      S (lower half thrown high), S' (upper half thrown low)
///
/// gamma_full and gamma_prime_full are built straight from their defining
/// branches, not from gamma_half, so the fixed-point-extension relation
/// between them stays a testable property.
namespace zolosign {

/// Multiplication by a on {0, ..., n-1}: x -> {ax}_n. A bijection because
/// gcd(a, n) = 1.
inline Permutation sigma(const UnitResidue& a) {
    const std::int64_t n = a.modulus().value();
    std::vector<std::int64_t> images(static_cast<std::size_t>(n));
    for (std::int64_t x = 0; x < n; ++x)
        images[static_cast<std::size_t>(x)] = a.value() * x % n;
    return Permutation(0, std::move(images));
}

/// The half-range permutation of {1, ..., (n-1)/2}:
/// x -> n - {ax}_n when {ax}_n lands in the upper half, else x -> {ax}_n.
/// For n = 3 the domain is the single point {1} and the map is the identity.
inline Permutation gamma_half(const UnitResidue& a) {
    const std::int64_t n = a.modulus().value();
    const std::int64_t m = a.modulus().half();
    std::vector<std::int64_t> images(static_cast<std::size_t>(m));
    for (std::int64_t x = 1; x <= m; ++x) {
        std::int64_t r = a.value() * x % n;
        assert(r != 0);  // impossible for a unit and 1 <= x <= n-1
        images[static_cast<std::size_t>(x - 1)] = r >= (n + 1) / 2 ? n - r : r;
    }
    return Permutation(1, std::move(images));
}

enum class GaussVariant {
    lower,  ///< S: points 1 <= x <= (n-1)/2 with {ax}_n >= (n+1)/2
    upper,  ///< S': points (n+1)/2 <= x <= n-1 with {ax}_n <= (n-1)/2
};

/// A Gauss set together with the data that produced it. Members ascend.
struct GaussSet {
    OddModulus modulus;
    std::int64_t a;
    GaussVariant variant;
    std::vector<std::int64_t> members;

    std::int64_t size() const { return static_cast<std::int64_t>(members.size()); }
};

inline GaussSet gauss_set(const UnitResidue& a, GaussVariant variant) {
    const std::int64_t n = a.modulus().value();
    std::vector<std::int64_t> members;
    if (variant == GaussVariant::lower) {
        for (std::int64_t x = 1; x <= (n - 1) / 2; ++x)
            if (a.value() * x % n >= (n + 1) / 2) members.push_back(x);
    } else {
        for (std::int64_t x = (n + 1) / 2; x <= n - 1; ++x)
            if (a.value() * x % n <= (n - 1) / 2) members.push_back(x);
    }
    return GaussSet{a.modulus(), a.value(), variant, std::move(members)};
}

/// Full-range version of gamma: the three-branch definition on {0, ..., n-1}.
/// Moves only the lower half; 0 and the upper half are fixed.
inline Permutation gamma_full(const UnitResidue& a) {
    const std::int64_t n = a.modulus().value();
    std::vector<std::int64_t> images(static_cast<std::size_t>(n));
    for (std::int64_t x = 0; x < n; ++x) {
        std::int64_t r = a.value() * x % n;
        if (x >= 1 && x <= (n - 1) / 2)
            images[static_cast<std::size_t>(x)] = r >= (n + 1) / 2 ? n - r : r;
        else
            images[static_cast<std::size_t>(x)] = x;
    }
    return Permutation(0, std::move(images));
}

/// Mirror of gamma_full: moves only the upper half.
/// x -> n - {ax}_n when x is in S', x -> {ax}_n on the rest of the upper
/// half, everything else fixed.
inline Permutation gamma_prime_full(const UnitResidue& a) {
    const std::int64_t n = a.modulus().value();
    std::vector<std::int64_t> images(static_cast<std::size_t>(n));
    for (std::int64_t x = 0; x < n; ++x) {
        if (x >= (n + 1) / 2) {
            std::int64_t r = a.value() * x % n;
            images[static_cast<std::size_t>(x)] = r <= (n - 1) / 2 ? n - r : r;
        } else {
            images[static_cast<std::size_t>(x)] = x;
        }
    }
    return Permutation(0, std::move(images));
}

}  // namespace zolosign
