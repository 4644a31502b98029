#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "zolosign/modmath.hpp"
#include "zolosign/perm.hpp"
#include "zolosign/symbols.hpp"
#include "zolosign/zperms.hpp"

/// Constructive machinery behind the permutation characterization of the
/// Jacobi symbol: primitive roots of odd prime powers, the CRT-built
/// generator family of a composite modulus, and the invariant-partition
/// checks that assemble sign(sigma_{a,n}) from prime-power pieces.
namespace zolosign {

struct InvalidPrimePowerError : Error {
    using Error::Error;
};

/// The orbit of 1 under a claimed primitive root came up short.
struct NotPrimitiveError : Error {
    using Error::Error;
};

struct NotCompositeError : Error {
    using Error::Error;
};

/// Smallest primitive root modulo q = p^alpha (p an odd prime): the least
/// g whose multiplicative order is phi(q). Order is tested through the
/// prime divisors of phi(q): g is primitive iff g^(phi/ell) != 1 for every
/// prime ell | phi.
inline UnitResidue primitive_root(std::int64_t q) {
    std::vector<PrimePower> f;
    if (q >= 2) f = factorize(q);
    if (f.size() != 1 || f[0].prime == 2)
        throw InvalidPrimePowerError("primitive_root: " + std::to_string(q) +
                                     " is not an odd prime power");
    const std::int64_t phi = euler_phi(q);
    const auto phi_primes = factorize(phi);
    OddModulus modulus(q);
    for (std::int64_t g = 2; g < q; ++g) {
        if (std::gcd(g, q) != 1) continue;
        bool primitive = true;
        for (const auto& pp : phi_primes)
            if (pow_mod(g, phi / pp.prime, q) == 1) {
                primitive = false;
                break;
            }
        if (primitive) return UnitResidue(g, modulus);
    }
    throw InvalidPrimePowerError("primitive_root: no generator found for " + std::to_string(q));
}

/// The orbit of 1 under multiplication by a primitive root g modulo a prime
/// p, which is the whole of {1, ..., p-1} traversed as a single cycle. Being
/// a (p-1)-cycle its sign is -1, so sigma_{g,p} is odd.
struct CycleStructure {
    std::vector<std::int64_t> cycle;  ///< orbit of 1: 1, g, g^2, ...
    Sign sign = Sign::negative();
};

inline CycleStructure sigma_cycle_structure(const UnitResidue& g) {
    const std::int64_t p = g.modulus().value();
    if (!g.modulus().prime())
        throw std::invalid_argument("sigma_cycle_structure: modulus must be prime");
    std::vector<std::int64_t> cycle;
    std::int64_t x = 1;
    do {
        cycle.push_back(x);
        x = g.value() * x % p;
    } while (x != 1 && static_cast<std::int64_t>(cycle.size()) < p);
    if (static_cast<std::int64_t>(cycle.size()) != p - 1)
        throw NotPrimitiveError("sigma_cycle_structure: orbit of 1 has length " +
                                std::to_string(cycle.size()) + ", expected " +
                                std::to_string(p - 1));
    // A cycle of even length p-1 is an odd permutation.
    return {std::move(cycle), Sign::negative()};
}

namespace detail {

/// x = r1 (mod m1), x = r2 (mod m2) for coprime m1, m2; result in [0, m1*m2).
inline std::int64_t crt_pair(std::int64_t r1, std::int64_t m1, std::int64_t r2,
                             std::int64_t m2) {
    // Solve m1*t = r2 - r1 (mod m2) via the extended Euclid inverse.
    std::int64_t inv = 0, b = m2, x0 = 0, x1 = 1, a = m1 % m2;
    while (a > 1) {
        std::int64_t qq = a / b;
        a -= qq * b;
        std::swap(a, b);
        x1 -= qq * x0;
        std::swap(x0, x1);
    }
    inv = least_nonneg_residue(x1, m2);
    std::int64_t t = least_nonneg_residue((r2 - r1) % m2 * inv, m2);
    return r1 + m1 * t;
}

}  // namespace detail

/// One generator per prime-power factor q = p^alpha of n: g is a primitive
/// root mod q and g = 1 modulo the complementary cofactor n/q. Together the
/// entries generate the full unit group of n.
struct GeneratorFamily {
    struct Entry {
        std::int64_t prime_power;
        UnitResidue g;  ///< as a unit mod n
    };
    OddModulus modulus;
    std::vector<Entry> entries;
};

inline GeneratorFamily build_generator_family(const OddModulus& n) {
    GeneratorFamily family{n, {}};
    for (const auto& pp : n.factorization()) {
        const std::int64_t q = pp.value();
        const std::int64_t cofactor = n.value() / q;
        const std::int64_t local = primitive_root(q).value();
        const std::int64_t g =
            cofactor == 1 ? local : detail::crt_pair(local, q, 1 % cofactor, cofactor);
        UnitResidue unit(g, n);
        assert(least_nonneg_residue(g, q) == local);
        assert(cofactor == 1 || least_nonneg_residue(g, cofactor) == 1 % cofactor);
        family.entries.push_back({q, unit});
    }
    return family;
}

/// Checks the induction step from p^(alpha-1) to p^alpha with g the smallest
/// primitive root mod p^alpha and X1 the multiples of p:
///   - X1 is invariant under sigma_{g, p^alpha};
///   - the restriction to X1, relabeled by x -> x/p, is sigma_{g, p^(alpha-1)};
///   - the restriction to the complement X2 has sign -1;
///   - the two restricted signs multiply to the directly computed sign.
/// Returns true iff all four hold.
inline bool verify_prime_power_induction(std::int64_t p, int alpha) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("verify_prime_power_induction: p must be an odd prime");
    if (alpha < 2) throw std::invalid_argument("verify_prime_power_induction: alpha must be >= 2");
    std::int64_t q = 1;
    for (int i = 0; i < alpha; ++i) q = detail::checked_mul(q, p);
    if (q > kMaxModulus)
        throw std::invalid_argument("verify_prime_power_induction: p^alpha exceeds the modulus bound");

    OddModulus modulus(q);
    const UnitResidue g = primitive_root(q);
    const Permutation sig = sigma(g);

    const std::int64_t sub = q / p;  // p^(alpha-1)
    std::vector<std::int64_t> multiples(static_cast<std::size_t>(sub));
    for (std::int64_t i = 0; i < sub; ++i) multiples[static_cast<std::size_t>(i)] = i * p;

    Permutation on_multiples = Permutation::identity(0, 1);
    try {
        on_multiples = restrict(sig, multiples);
    } catch (const NotInvariantError&) {
        return false;
    }

    // restrict() relabels X1 = {0, p, 2p, ...} onto {0, 1, 2, ...}, which is
    // exactly the x -> x/p identification.
    const Permutation expected_sub = sigma(UnitResidue(g.value(), OddModulus(sub)));
    if (!(on_multiples == expected_sub)) return false;

    std::vector<std::int64_t> complement;
    complement.reserve(static_cast<std::size_t>(q - sub));
    for (std::int64_t x = 0; x < q; ++x)
        if (x % p != 0) complement.push_back(x);
    const Permutation on_units = restrict(sig, complement);
    if (!(sign_by_cycles(on_units) == Sign::negative())) return false;

    return sign_by_cycles(on_multiples) * sign_by_cycles(on_units) == sign_by_cycles(sig);
}

/// Checks the CRT partition argument for a modulus with at least two
/// distinct prime factors. For each family generator g with local factor q:
/// fixing residues modulo every other prime-power factor partitions
/// {0, ..., n-1} into classes of size q; each class must be invariant under
/// sigma_{g,n}, each restriction must have sign equal to the Jacobi symbol
/// of the local component, and the product over classes must reproduce the
/// directly computed sign(sigma_{g,n}) = (g/n). Returns true iff every check
/// holds for every generator.
inline bool verify_crt_partition(const OddModulus& n) {
    const auto& factors = n.factorization();
    if (factors.size() < 2)
        throw NotCompositeError("verify_crt_partition: " + std::to_string(n.value()) +
                                " is a prime power");

    const GeneratorFamily family = build_generator_family(n);
    for (const auto& entry : family.entries) {
        const std::int64_t q = entry.prime_power;
        const Permutation sig = sigma(entry.g);
        const std::int64_t g_local = least_nonneg_residue(entry.g.value(), q);
        const JacobiValue local_symbol = jacobi_standard(g_local, OddModulus(q));

        // Enumerate the residue tuples over the complementary factors in
        // lexicographic order; each tuple pins one class via CRT.
        std::vector<std::int64_t> other;
        for (const auto& pp : factors)
            if (pp.value() != q) other.push_back(pp.value());
        const std::int64_t cofactor = n.value() / q;

        std::vector<std::int64_t> tuple(other.size(), 0);
        Sign product = Sign::positive();
        while (true) {
            std::int64_t rem = 0, mod = 1;
            for (std::size_t i = 0; i < other.size(); ++i) {
                rem = detail::crt_pair(rem, mod, tuple[i], other[i]);
                mod *= other[i];
            }
            assert(mod == cofactor);

            std::vector<std::int64_t> cls(static_cast<std::size_t>(q));
            for (std::int64_t j = 0; j < q; ++j)
                cls[static_cast<std::size_t>(j)] = rem + j * cofactor;

            Permutation restricted = Permutation::identity(0, 1);
            try {
                restricted = restrict(sig, cls);
            } catch (const NotInvariantError&) {
                return false;
            }
            const Sign s = sign_by_cycles(restricted);
            if (!(JacobiValue(s) == local_symbol)) return false;
            product = product * s;

            // Next tuple, lexicographic.
            std::size_t i = other.size();
            while (i > 0 && ++tuple[i - 1] == other[i - 1]) tuple[--i] = 0;
            if (i == 0) break;
        }

        if (!(product == sign_by_cycles(sig))) return false;
        if (!(JacobiValue(product) == jacobi_standard(entry.g.value(), n))) return false;
    }
    return true;
}

}  // namespace zolosign
