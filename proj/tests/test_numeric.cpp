#include <doctest.h>

#include <cmath>

#include "dit/bits.hpp"
#include "dit/errors.hpp"
#include "dit/numeric.hpp"
#include "dit/prng.hpp"
#include "support/oracles.hpp"

using namespace dit;

TEST_CASE("binom matches Pascal's triangle")
{
    oracle::Pascal pascal(64);
    CHECK(binom(11, 6) == 462);
    CHECK(binom(21, 10) == pascal(21, 10));
    CHECK(binom(21, 10) == 352716);
    CHECK(binom(5, 7) == 0);
    for (unsigned n = 0; n <= 64; ++n) {
        Nat row = 0;
        for (unsigned k = 0; k <= n; ++k) {
            REQUIRE(binom(n, k) == pascal(n, k));
            row += binom(n, k);
        }
        CHECK(row == Nat(1) << n);
        CHECK(binom(n, 0) == 1);
        CHECK(binom(n, n) == 1);
    }
    for (unsigned n = 2; n <= 64; ++n)
        for (unsigned k = 1; k < n; ++k)
            REQUIRE(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
}

TEST_CASE("isqrt is exact")
{
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(2673177) == 1634);
    CHECK(Nat(1634 * 1634) <= 2673177);
    CHECK(Nat(1635 * 1635) > 2673177);
    SplitMix64 rng(7);
    for (int t = 0; t < 200; ++t) {
        Nat r = rng.upto_pow2(127);
        CHECK(isqrt(Nat(r * r)) == r);
        CHECK(isqrt(Nat(r * r + 1)) == r);
        Nat k = rng.upto_pow2(255);
        CHECK(isqrt(Nat(k * k)) == k);
    }
}

TEST_CASE("info is log2 with info(0) = info(1) = 0")
{
    CHECK(info(0) == 0.0);
    CHECK(info(1) == 0.0);
    CHECK(info(2) == 1.0);
    CHECK(info(1024) == 10.0);
    CHECK(info(Nat(1) << 5000) == doctest::Approx(5000.0));
    CHECK(info(3) == doctest::Approx(std::log2(3.0)).epsilon(1e-15));
}

TEST_CASE("scale is floor log2")
{
    CHECK_FALSE(scale(0).has_value());
    CHECK(*scale(1) == 0);
    CHECK(*scale(7) == 2);
    CHECK(*scale(8) == 3);
}

TEST_CASE("shannon entropy")
{
    CHECK(shannon_entropy(Dist({0.5, 0.5})) == doctest::Approx(1.0));
    CHECK(shannon_entropy(Dist({0.75, 0.25})) == doctest::Approx(0.811278).epsilon(1e-6));
    CHECK(shannon_entropy(Dist({1.0})) == 0.0);
    CHECK(shannon_entropy(Dist({1.0, 0.0})) == 0.0);
    CHECK_THROWS_AS(Dist({0.5, 0.6}), rejected_input);
    CHECK_THROWS_AS(Dist({-0.5, 1.5}), rejected_input);

    SplitMix64 rng(11);
    for (std::size_t len : {2u, 3u, 5u, 8u}) {
        const double hmax = shannon_entropy(Dist(std::vector<double>(len, 1.0 / len)));
        CHECK(hmax == doctest::Approx(std::log2(static_cast<double>(len))));
        for (int t = 0; t < 50; ++t) {
            std::vector<double> w(len);
            double tot = 0;
            for (auto& x : w) {
                x = static_cast<double>(rng.below(1000) + 1);
                tot += x;
            }
            for (auto& x : w)
                x /= tot;
            double s = 0;
            for (std::size_t i = 0; i + 1 < len; ++i)
                s += w[i];
            w.back() = 1.0 - s;
            CHECK(shannon_entropy(Dist(w)) <= hmax + 1e-12);
        }
    }
}

TEST_CASE("catalan, stirling and bell against enumeration")
{
    CHECK(catalan(3) == 5);
    CHECK(stirling2(3, 2) == 3);
    CHECK(bell(4) == 15);
    for (unsigned n = 0; n <= 9; ++n)
        CHECK(catalan(n) == static_cast<unsigned long>(oracle::balanced_bracketings(n)));
    for (unsigned n = 0; n <= 8; ++n) {
        for (unsigned k = 0; k <= n; ++k)
            CHECK(stirling2(n, k) == static_cast<unsigned long>(oracle::set_partitions(n, k)));
        CHECK(bell(n) == static_cast<unsigned long>(oracle::all_set_partitions(n)));
    }
    CHECK(combinatorial_counts(CountKind::stirling2, 3, 2) == 3);
    CHECK_THROWS_AS(combinatorial_counts(CountKind::stirling2, 3), rejected_input);
    CHECK(combinatorial_counts(CountKind::catalan, 1) == 1);
}

TEST_CASE("delta_arith")
{
    CHECK(delta_arith(ArithOp::mul, 7, Nat(13)) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(delta_arith(ArithOp::add, 4, Nat(4)) == doctest::Approx(-1.0));
    CHECK(delta_arith(ArithOp::self_add, 1) == doctest::Approx(1.0));
    CHECK(delta_arith(ArithOp::self_add, 12345) == doctest::Approx(1.0));
    CHECK(delta_arith(ArithOp::self_mul, 1024) == doctest::Approx(10.0));
    CHECK_THROWS_AS(delta_arith(ArithOp::add, 0, Nat(3)), rejected_input);
    CHECK_THROWS_AS(delta_arith(ArithOp::mul, 3), rejected_input);
    SplitMix64 rng(3);
    for (int t = 0; t < 1000; ++t) {
        Nat x = rng.upto_pow2(53) + 1, y = rng.upto_pow2(53) + 1;
        CHECK(std::abs(delta_arith(ArithOp::mul, x, y)) < 1e-9);
    }
}

TEST_CASE("log2 C(n, n/2) / n approaches 1")
{
    const double r100 = info(binom(100, 50)) / 100.0;
    const double r1000 = info(binom(1000, 500)) / 1000.0;
    CHECK(r1000 > 0.98);
    CHECK(r1000 < 1.0);
    CHECK(r100 < r1000);
}

TEST_CASE("SplitMix64 reference values")
{
    // First outputs for seed 0 of the standard generator.
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    SplitMix64 a(99), b(99);
    for (int i = 0; i < 10; ++i)
        CHECK(a.upto_pow2(70) == b.upto_pow2(70));
    SplitMix64 c(5);
    for (int i = 0; i < 1000; ++i) {
        Nat v = c.upto_pow2(3);
        CHECK(v >= 0);
        CHECK(v <= 8);
    }
}

TEST_CASE("bit vectors")
{
    auto v = BitVector::parse("1001");
    CHECK(v.get(0));
    CHECK_FALSE(v.get(1));
    CHECK(v.str() == "1001");
    CHECK(v.popcount() == 2);
    CHECK((v ^ BitVector::parse("1100")).str() == "0101");
    CHECK_THROWS_AS(v ^= BitVector::parse("10"), rejected_input);
    CHECK_THROWS_AS(BitVector::parse("10a"), rejected_input);
    BitVector big(130);
    big.set(129);
    CHECK(big.ones() == std::vector<std::size_t>{129});
}
