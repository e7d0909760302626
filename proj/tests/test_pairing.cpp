#include <doctest.h>

#include <cmath>

#include "dit/errors.hpp"
#include "dit/kernels.hpp"
#include "dit/pairing.hpp"
#include "dit/prng.hpp"
#include "support/oracles.hpp"

using namespace dit;

TEST_CASE("pair golden values")
{
    CHECK(pair(Point(0, 0)) == 0);
    CHECK(pair(Point(5, 811)) == 334147);
    CHECK(pair(Point(488757, 10)) == Nat("119446834538"));
}

TEST_CASE("unpair golden values")
{
    CHECK(unpair(334147) == Point(5, 811));
    CHECK(unpair(0) == Point(0, 0));
    CHECK(unpair(Nat("119446834538")) == Point(488757, 10));
    auto tr = triangular_root(334147);
    CHECK(tr.w == 816);
    CHECK(tr.t == 333336);
}

TEST_CASE("pair follows the counter-diagonal walk")
{
    auto walk = oracle::cantor_walk(100000);
    for (std::size_t z = 0; z < walk.size(); ++z) {
        const Point p(walk[z].first, walk[z].second);
        REQUIRE(pair(p) == static_cast<unsigned long>(z));
        REQUIRE(unpair(static_cast<unsigned long>(z)) == p);
    }
}

TEST_CASE("round trips")
{
    for (unsigned long x = 0; x < 512; ++x)
        for (unsigned long y = 0; y < 512; ++y)
            REQUIRE(unpair(pair(Point(x, y))) == Point(x, y));
    SplitMix64 rng(42);
    for (int t = 0; t < 500; ++t) {
        Point p(rng.upto_pow2(256), rng.upto_pow2(256));
        REQUIRE(unpair(pair(p)) == p);
        Nat z = rng.upto_pow2(512);
        REQUIRE(pair(unpair(z)) == z);
    }
}

TEST_CASE("taxicab shells")
{
    CHECK(taxicab(Point(0, 0), Point(9, 4)) == 13);
    CHECK(taxicab(Point(3, 7), Point(5, 2)) == 7);
    SplitMix64 rng(1);
    for (int t = 0; t < 100; ++t) {
        Point a(rng.upto_pow2(40), rng.upto_pow2(40)), b(rng.upto_pow2(40), rng.upto_pow2(40));
        CHECK(taxicab(a, b) == taxicab(b, a));
    }
    // On shell k the index is y + (1 + ... + k).
    for (unsigned long k = 0; k < 60; ++k)
        for (unsigned long y = 0; y <= k; ++y)
            CHECK(pair(Point(k - y, y)) == y + k * (k + 1) / 2);
}

TEST_CASE("path entropy")
{
    CHECK(path_entropy(Point(1, 1)) == doctest::Approx(1.0));
    CHECK(path_entropy(Point(9, 0)) == 0.0);
    CHECK(path_entropy(Point(3, 1)) == doctest::Approx(0.811278).epsilon(1e-6));
    CHECK_THROWS_AS(path_entropy(Point(0, 0)), rejected_input);
}

TEST_CASE("pairing efficiency")
{
    CHECK(pairing_efficiency(Point(1, 1)) == doctest::Approx(2.0));
    CHECK(std::abs(pairing_efficiency(Point(1000000, 1000000)) - 1.0) < 0.01);
    CHECK(std::abs(pairing_efficiency(Point(1000000, 3000000)) - (3.0 - std::log2(3.0))) < 0.01);
    CHECK_THROWS_AS(pairing_efficiency(Point(0, 5)), rejected_input);
    CHECK(pairing_efficiency(Point(3, 5)) != doctest::Approx(pairing_efficiency(Point(5, 3))));
    CHECK(pairing_efficiency(Point(4, 4)) == doctest::Approx(pairing_efficiency(Point(4, 4))));
}

TEST_CASE("shell minimum of the surface sits on the diagonal")
{
    for (unsigned long k = 2; k <= 200; k += 2) {
        double best = 1e300;
        unsigned long arg = 0;
        for (unsigned long x = 1; x < k; ++x) {
            double d = pairing_efficiency(Point(x, k - x));
            if (d < best) {
                best = d;
                arg = x;
            }
        }
        CHECK(arg == k / 2);
    }
}

TEST_CASE("efficiency surface")
{
    auto s = efficiency_surface(10, 10, 1);
    CHECK(s.grid.size() == 100);
    for (const auto& c : s.grid)
        CHECK(c.delta >= 1.0 - 1e-9);
    auto small = efficiency_surface(2, 2, 1);
    REQUIRE(small.grid.size() == 4);
    CHECK(small.grid[0].x == 1);
    CHECK(small.grid[0].y == 1);
    CHECK(small.grid[0].delta == doctest::Approx(2.0));
    CHECK(small.grid[1].x == 2);  // x varies fastest
    CHECK(small.grid[1].y == 1);
    auto degenerate = efficiency_surface(10, 1, 20);
    REQUIRE(degenerate.grid.size() == 1);
    CHECK(degenerate.grid[0].x == 1);

    auto wide = efficiency_surface(1000000000, 1000000000, 9999991);
    for (const auto& c : wide.grid) {
        REQUIRE(c.delta >= 1.0 - 1e-9);
        if (c.x % 7 == 0)
            CHECK(c.delta == doctest::Approx(pairing_efficiency(Point(c.x, c.y))).epsilon(1e-12));
    }
}
