#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <thread>

#include "dit/errors.hpp"
#include "dit/sorted_injection.hpp"
#include "support/oracles.hpp"

using namespace dit;

namespace {

const ZetaKind all_kinds[] = {ZetaKind::cardinality, ZetaKind::sum, ZetaKind::product,
                              ZetaKind::binary, ZetaKind::parity};

FinSet random_small_set(SplitMix64& rng)
{
    std::set<unsigned long> s;
    const std::size_t size = 1 + rng.below(4);
    while (s.size() < size)
        s.insert(rng.below(14));
    std::vector<Nat> v(s.begin(), s.end());
    return FinSet(std::move(v));
}

}  // namespace

TEST_CASE("zeta values of the reference set")
{
    const FinSet s = FinSet::of({1, 4, 6, 8, 10, 11});
    CHECK(zeta_eval(ZetaKind::cardinality, s) == 6);
    CHECK(zeta_eval(ZetaKind::sum, s) == 40);
    CHECK(zeta_eval(ZetaKind::product, s) == 21120);
    CHECK(zeta_eval(ZetaKind::binary, s) == 3410);
    CHECK(zeta_eval(ZetaKind::parity, s) == 0);
    CHECK(zeta_eval(ZetaKind::parity, FinSet::of({2, 4})) == 0);
    CHECK(zeta_eval(ZetaKind::parity, FinSet::of({2, 5})) == 1);
    CHECK_THROWS_AS(zeta_eval(ZetaKind::sum, FinSet()), rejected_input);
}

TEST_CASE("theta index by explicit enumeration")
{
    // Sets with sum 3 that come before {1,2} in phi_car order.
    const FinSet s = FinSet::of({1, 2});
    const auto limit = phi_car_index(s).get_ui();
    unsigned long expect = 0;
    for (unsigned long i = 0; i < limit; ++i) {
        Nat total = 0;
        const FinSet t = phi_car_inv(i);
        for (const auto& e : t.elems())
            total += e;
        if (total == 3)
            ++expect;
    }
    CHECK(theta_index(ZetaKind::sum, s) == expect);

    // First occurrence of each value has index 0.
    for (auto kind : all_kinds) {
        std::set<Nat> seen;
        for (unsigned long i = 0; i < 400; ++i) {
            FinSet t = phi_car_inv(i);
            if (seen.insert(zeta_eval(kind, t)).second)
                CHECK(theta_index(kind, t) == 0);
        }
    }
}

TEST_CASE("theta for cardinality equals combinadic rank")
{
    SplitMix64 rng(8);
    ThetaIndexer idx(ZetaKind::cardinality);
    for (int t = 0; t < 500; ++t) {
        FinSet s = random_small_set(rng);
        REQUIRE(idx.theta(s) == combinadic_rank(s));
    }
}

TEST_CASE("theta consistency over phi_car order")
{
    const unsigned long N = 5000;
    for (auto kind : all_kinds) {
        std::map<Nat, unsigned long> running;
        ThetaIndexer idx(kind);
        for (unsigned long i = 0; i < N; ++i) {
            FinSet s = phi_car_inv(i);
            unsigned long& r = running[zeta_eval(kind, s)];
            REQUIRE(idx.theta(s) == r);
            ++r;
        }
        // The literal scan agrees on a sample.
        for (unsigned long i = 0; i < N; i += 499)
            CHECK(theta_index(kind, phi_car_inv(i)) == idx.theta(phi_car_inv(i)));
    }
}

TEST_CASE("theta budget")
{
    CHECK_THROWS_AS(theta_index(ZetaKind::sum, FinSet::of({1, 4, 6, 8, 10, 11}), 1000), budget_exceeded);
    CHECK_THROWS_AS(theta_index(ZetaKind::sum, FinSet()), rejected_input);
}

TEST_CASE("ThetaIndexer shared between threads")
{
    ThetaIndexer idx(ZetaKind::sum);
    std::vector<FinSet> sets;
    for (unsigned long i = 0; i < 3000; i += 3)
        sets.push_back(phi_car_inv(i));
    std::vector<Nat> expect;
    for (const auto& s : sets)
        expect.push_back(theta_index(ZetaKind::sum, s));
    std::vector<std::vector<Nat>> got(4);
    std::vector<std::thread> workers;
    for (int w = 0; w < 4; ++w)
        workers.emplace_back([&, w] {
            for (std::size_t i = 0; i < sets.size(); ++i)
                got[w].push_back(idx.theta(sets[(i * 7 + w) % sets.size()]));
        });
    for (auto& t : workers)
        t.join();
    for (int w = 0; w < 4; ++w)
        for (std::size_t i = 0; i < sets.size(); ++i)
            CHECK(got[w][i] == expect[(i * 7 + w) % sets.size()]);
}

TEST_CASE("phi_zeta")
{
    CHECK(phi_zeta(ZetaKind::cardinality, FinSet::of({1, 4, 6, 8, 10, 11})) == 334147);
    // {0,1} has phi_car index 1 and is the first set with sum 1; {1} is the second.
    CHECK(phi_car_index(FinSet::of({0, 1})) == 1);
    CHECK(phi_zeta(ZetaKind::sum, FinSet::of({0, 1})) == pair(Point(1, 0)));
    CHECK(phi_zeta(ZetaKind::sum, FinSet::of({0, 1})) == 1);
    CHECK(phi_zeta(ZetaKind::sum, FinSet::of({1})) == pair(Point(1, 1)));

    for (auto kind : all_kinds) {
        ThetaIndexer idx(kind);
        std::set<Nat> image;
        for (unsigned k = 1; k <= 3; ++k)
            for (const auto& v : oracle::colex_subsets(10, k)) {
                std::vector<Nat> e(v.begin(), v.end());
                REQUIRE(image.insert(phi_zeta(idx, kind, FinSet(std::move(e)))).second);
            }
    }
}

TEST_CASE("power-set dilations of small bases")
{
    const FinSet base = FinSet::of({1, 2, 3, 4});
    CHECK(powerset_dilation(base, ZetaKind::sum).expand() ==
          std::vector<Nat>{1, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 9, 10});

    // Oracle: multiply out each of the 15 masks.
    std::vector<Nat> prod;
    for (unsigned m = 1; m < 16; ++m) {
        Nat p = 1;
        for (unsigned i = 0; i < 4; ++i)
            if ((m >> i) & 1U)
                p *= i + 1;
        prod.push_back(p);
    }
    std::sort(prod.begin(), prod.end());
    CHECK(powerset_dilation(base, ZetaKind::product).expand() == prod);
    CHECK(prod == std::vector<Nat>{1, 2, 2, 3, 3, 4, 4, 6, 6, 8, 8, 12, 12, 24, 24});

    auto parity = powerset_dilation(base, ZetaKind::parity);
    CHECK(parity.counts.at(1) == 8);
    CHECK(parity.counts.at(0) == 7);

    std::vector<Nat> one_to_fifteen;
    for (unsigned long i = 1; i <= 15; ++i)
        one_to_fifteen.emplace_back(i);
    CHECK(powerset_dilation(FinSet::of({0, 1, 2, 3}), ZetaKind::binary).expand() == one_to_fifteen);

    for (unsigned k = 1; k <= 12; ++k) {
        std::vector<Nat> e;
        for (unsigned long i = 0; i < k; ++i)
            e.emplace_back(i);
        auto t = powerset_dilation(FinSet(e), ZetaKind::binary);
        CHECK(t.counts.size() == (1UL << k) - 1);
        CHECK(t.counts.begin()->first == 1);
        CHECK(t.counts.rbegin()->first == (1UL << k) - 1);
        CHECK(t.total() == (1UL << k) - 1);
    }

    auto card = powerset_dilation(base, ZetaKind::cardinality);
    CHECK(card.counts.at(2) == 6);
    std::vector<Nat> big;
    for (unsigned long i = 0; i < 25; ++i)
        big.emplace_back(i);
    CHECK_THROWS_AS(powerset_dilation(FinSet(big), ZetaKind::sum), budget_exceeded);
}

TEST_CASE("density census")
{
    std::vector<Nat> evens, squares;
    for (unsigned long i = 2; i <= 1000000; i += 2)
        evens.emplace_back(i);
    for (unsigned long i = 1; i * i <= 1000000; ++i)
        squares.emplace_back(i * i);
    auto de = density_census(evens, 1000000);
    CHECK(de.c == 500000);
    CHECK(de.d == 0.5);
    CHECK(*de.decay == 2.0);
    CHECK(density_census(squares, 1000000).d == doctest::Approx(0.001));
    auto empty = density_census(std::vector<Nat>{}, 10);
    CHECK(empty.c == 0);
    CHECK(empty.d == 0.0);
    CHECK_FALSE(empty.decay.has_value());
    std::vector<Nat> primes;
    for (auto p : oracle::primes_upto(1000000))
        primes.emplace_back(static_cast<unsigned long>(p));
    auto dp = density_census(primes, 1000000);
    CHECK(std::abs(*dp.decay - std::log(1e6)) < 0.1 * std::log(1e6));
}
