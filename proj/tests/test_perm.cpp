#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "zolosign/perm.hpp"

using namespace zolosign;

namespace {

Permutation random_permutation(std::mt19937_64& rng, std::int64_t offset, std::int64_t size) {
    std::vector<std::int64_t> images(static_cast<std::size_t>(size));
    std::iota(images.begin(), images.end(), offset);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(offset, std::move(images));
}

}  // namespace

TEST_CASE("construction validates bijectivity") {
    CHECK_NOTHROW(Permutation(0, {1, 0, 2}));
    CHECK_THROWS_AS(Permutation(0, {0, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(0, {0, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(1, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("composition laws") {
    const auto id = Permutation::identity(1, 3);
    const Permutation swap12(1, {2, 1, 3});
    const Permutation swap23(1, {1, 3, 2});

    CHECK(compose(id, swap12) == swap12);
    CHECK(compose(swap12, id) == swap12);
    CHECK(compose(swap12, swap12.inverse()) == id);

    // swap(1,2) after swap(2,3): 1 -> 2, 2 -> 3, 3 -> 1.
    CHECK(compose(swap12, swap23) == Permutation(1, {2, 3, 1}));

    CHECK_THROWS_AS(compose(swap12, Permutation::identity(0, 3)), DomainMismatchError);
    CHECK_THROWS_AS(compose(swap12, Permutation::identity(1, 4)), DomainMismatchError);
}

TEST_CASE("parity by cycles on known shapes") {
    CHECK(sign_by_cycles(Permutation::identity(0, 5)) == Sign::positive());
    CHECK(sign_by_cycles(Permutation(0, {1, 0})) == Sign::negative());
    // Multiplication by 3 mod 7 on {1,...,6} is one 6-cycle, an odd permutation.
    const Permutation six_cycle(1, {3, 6, 2, 5, 1, 4});
    CHECK(sign_by_cycles(six_cycle) == Sign::negative());
    CHECK(cycle_notation(six_cycle) == "(1 3 2 6 4 5)");
}

TEST_CASE("parity by inversions on known shapes") {
    const auto id = sign_by_inversions(Permutation::identity(1, 4));
    CHECK(id.sign == Sign::positive());
    CHECK(id.inversions == 0);

    const auto reversal = sign_by_inversions(Permutation(1, {4, 3, 2, 1}));
    CHECK(reversal.sign == Sign::positive());
    CHECK(reversal.inversions == 6);

    const auto swap = sign_by_inversions(Permutation(1, {2, 1}));
    CHECK(swap.sign == Sign::negative());
    CHECK(swap.inversions == 1);

    const auto six_cycle = sign_by_inversions(Permutation(1, {3, 6, 2, 5, 1, 4}));
    CHECK(six_cycle.sign == Sign::negative());
    CHECK(six_cycle.inversions == 9);
}

TEST_CASE("both parity engines agree on every permutation of up to 7 elements") {
    for (std::int64_t m = 1; m <= 7; ++m) {
        std::vector<std::int64_t> images(static_cast<std::size_t>(m));
        std::iota(images.begin(), images.end(), std::int64_t{1});
        do {
            const Permutation p(1, images);
            const auto by_inversions = sign_by_inversions(p);
            CHECK(sign_by_cycles(p) == by_inversions.sign);
            CHECK(by_inversions.inversions == oracles::naive_inversions(p.images()));
        } while (std::next_permutation(images.begin(), images.end()));
    }
}

TEST_CASE("sign is a homomorphism under composition") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const std::int64_t size = 1 + static_cast<std::int64_t>(rng() % 40);
        const auto f = random_permutation(rng, 0, size);
        const auto g = random_permutation(rng, 0, size);
        CHECK(sign_by_cycles(compose(f, g)) == sign_by_cycles(f) * sign_by_cycles(g));
    }
}

TEST_CASE("merge-sort inversion count matches the quadratic oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t size = 1 + static_cast<std::int64_t>(rng() % 60);
        const auto p = random_permutation(rng, -5, size);
        CHECK(sign_by_inversions(p).inversions == oracles::naive_inversions(p.images()));
    }
}

TEST_CASE("restriction to invariant subsets") {
    const auto id9 = Permutation::identity(0, 9);
    const std::vector<std::int64_t> multiples{0, 3, 6};
    CHECK(restrict(id9, multiples) == Permutation::identity(0, 3));

    // Multiplication by 2 mod 9 maps {0,3,6} to itself: 0->0, 3->6, 6->3.
    std::vector<std::int64_t> sigma29(9);
    for (std::int64_t x = 0; x < 9; ++x) sigma29[static_cast<std::size_t>(x)] = 2 * x % 9;
    const Permutation p(0, sigma29);
    const Permutation restricted = restrict(p, multiples);
    CHECK(restricted == Permutation(0, {0, 2, 1}));
    CHECK(sign_by_cycles(restricted) == Sign::negative());

    const std::vector<std::int64_t> not_invariant{1, 2};
    CHECK_THROWS_AS(restrict(p, not_invariant), NotInvariantError);

    const std::vector<std::int64_t> unsorted{3, 0, 6};
    CHECK_THROWS_AS(restrict(p, unsorted), std::invalid_argument);
    CHECK_THROWS_AS(restrict(p, std::vector<std::int64_t>{}), std::invalid_argument);
    CHECK_THROWS_AS(restrict(p, std::vector<std::int64_t>{7, 9}), std::invalid_argument);
}

TEST_CASE("sign factors over an invariant subset and its complement") {
    std::mt19937_64 rng(31337);
    int checked = 0;
    while (checked < 200) {
        const std::int64_t size = 3 + static_cast<std::int64_t>(rng() % 30);
        const auto p = random_permutation(rng, 0, size);

        // Collect the cycles, then take a random nonempty proper union of them.
        std::vector<std::vector<std::int64_t>> cycles;
        std::vector<bool> seen(static_cast<std::size_t>(size), false);
        for (std::int64_t i = 0; i < size; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            std::vector<std::int64_t> cycle;
            std::int64_t x = i;
            while (!seen[static_cast<std::size_t>(x)]) {
                seen[static_cast<std::size_t>(x)] = true;
                cycle.push_back(x);
                x = p(x);
            }
            cycles.push_back(std::move(cycle));
        }
        if (cycles.size() < 2) continue;

        std::vector<std::int64_t> subset;
        const std::size_t take = 1 + rng() % (cycles.size() - 1);
        for (std::size_t c = 0; c < take; ++c)
            subset.insert(subset.end(), cycles[c].begin(), cycles[c].end());
        std::sort(subset.begin(), subset.end());

        std::vector<std::int64_t> complement;
        for (std::int64_t x = 0; x < size; ++x)
            if (!std::binary_search(subset.begin(), subset.end(), x)) complement.push_back(x);

        CHECK(sign_by_cycles(p) ==
              sign_by_cycles(restrict(p, subset)) * sign_by_cycles(restrict(p, complement)));
        ++checked;
    }
}

TEST_CASE("cycle notation lists cycles by smallest element with fixed points") {
    CHECK(cycle_notation(Permutation(1, {2, 4, 3, 1})) == "(1 2 4)(3)");
    CHECK(cycle_notation(Permutation::identity(1, 3)) == "(1)(2)(3)");
    CHECK(cycle_notation(Permutation(0, {1, 0})) == "(0 1)");
}
