#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "zolosign/modmath.hpp"

using namespace zolosign;

TEST_CASE("least nonnegative residue") {
    CHECK(least_nonneg_residue(9, 7) == 2);
    CHECK(least_nonneg_residue(0, 5) == 0);
    CHECK(least_nonneg_residue(-3, 7) == 4);
    CHECK(least_nonneg_residue(14, 7) == 0);
    CHECK(least_nonneg_residue(-7, 7) == 0);
}

TEST_CASE("floor division rounds toward minus infinity") {
    CHECK(floor_div(9, 7) == 1);
    CHECK(floor_div(-3, 7) == -1);
    CHECK(floor_div(14, 7) == 2);
    CHECK(floor_div(-14, 7) == -2);
    CHECK(floor_div(-15, 7) == -3);
    CHECK(floor_div(0, 3) == 0);
}

TEST_CASE("division identity ties residue and floor together") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::int64_t> xs(-1'000'000, 1'000'000);
    std::uniform_int_distribution<std::int64_t> ns(1, 9999);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t x = xs(rng);
        const std::int64_t n = ns(rng);
        const std::int64_t r = least_nonneg_residue(x, n);
        CHECK((x - r) % n == 0);
        CHECK(x == n * floor_div(x, n) + r);
    }
}

TEST_CASE("factorize on known values") {
    CHECK(factorize(45) == std::vector<PrimePower>{{3, 2}, {5, 1}});
    CHECK(factorize(7) == std::vector<PrimePower>{{7, 1}});
    CHECK(factorize(225) == std::vector<PrimePower>{{3, 2}, {5, 2}});
    CHECK(factorize(2) == std::vector<PrimePower>{{2, 1}});
    CHECK(factorize(1024) == std::vector<PrimePower>{{2, 10}});
    CHECK_THROWS_AS(factorize(1), std::invalid_argument);
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorization reassembles to the input across the full bound") {
    for (std::int64_t n = 2; n <= 1'000'000; ++n) {
        std::int64_t product = 1;
        std::int64_t last_prime = 1;
        for (const auto& pp : factorize(n)) {
            CHECK(pp.prime > last_prime);
            last_prime = pp.prime;
            product *= pp.value();
        }
        if (product != n) {
            FAIL("factorization of " << n << " reassembles to " << product);
        }
    }
    SUCCEED("all n in [2, 1e6] reassemble");
}

TEST_CASE("euler phi on known values and against brute force") {
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(15) == 8);
    CHECK(euler_phi(2) == 1);
    for (std::int64_t n = 2; n <= 10'000; ++n) {
        std::int64_t brute = 0;
        for (std::int64_t k = 1; k < n; ++k)
            if (std::gcd(k, n) == 1) ++brute;
        if (euler_phi(n) != brute) {
            FAIL("euler_phi(" << n << ") = " << euler_phi(n) << ", brute force says " << brute);
        }
    }
    SUCCEED("phi matches brute force on [2, 1e4]");
}

TEST_CASE("pow_mod matches repeated multiplication") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> bs(0, 5000);
    std::uniform_int_distribution<std::int64_t> es(0, 50);
    std::uniform_int_distribution<std::int64_t> ns(2, 5000);
    for (int i = 0; i < 500; ++i) {
        const std::int64_t b = bs(rng), e = es(rng), n = ns(rng);
        std::int64_t slow = 1 % n;
        for (std::int64_t j = 0; j < e; ++j) slow = slow * (b % n) % n;
        CHECK(pow_mod(b, e, n) == slow);
    }
}

TEST_CASE("odd modulus validation") {
    CHECK_THROWS_AS(OddModulus(4), std::invalid_argument);
    CHECK_THROWS_AS(OddModulus(1), std::invalid_argument);
    CHECK_THROWS_AS(OddModulus(-9), std::invalid_argument);
    CHECK_THROWS_AS(OddModulus(0), std::invalid_argument);

    const OddModulus n(45);
    CHECK(n.value() == 45);
    CHECK(n.half() == 22);
    CHECK(n.factorization() == std::vector<PrimePower>{{3, 2}, {5, 1}});
    CHECK_FALSE(n.prime());
    CHECK_FALSE(n.prime_power());
    CHECK(OddModulus(7).prime());
    CHECK(OddModulus(27).prime_power());
    CHECK_FALSE(OddModulus(27).prime());
}

TEST_CASE("unit residues are canonical") {
    const OddModulus five(5), nine(9);
    CHECK(make_unit(8, five).value() == 3);
    CHECK(make_unit(-1, nine).value() == 8);
    CHECK_THROWS_AS(make_unit(6, nine), NotAUnitError);
    CHECK_THROWS_AS(make_unit(0, five), NotAUnitError);
    CHECK(make_unit(-13, nine).value() == 5);
    CHECK(make_unit(1, five) == make_unit(6, five));
}
