#include <doctest.h>

#include <cmath>

#include <algorithm>
#include <random>

#include "dit/entropy.hpp"
#include "dit/errors.hpp"
#include "dit/fixtures.hpp"
#include "dit/kernels.hpp"
#include "dit/sat.hpp"
#include "dit/sbxor.hpp"
#include "support/formula_oracle.hpp"
#include "support/oracles.hpp"

using namespace dit;

namespace {

BitVector bv(const char* s) { return BitVector::parse(s); }

std::vector<std::uint64_t> row_words(const SbxorInstance& inst)
{
    std::vector<std::uint64_t> w;
    for (const auto& r : inst.rows)
        w.push_back(r.word(0));
    return w;
}

// Random instance whose target may fall outside the row span.
SbxorInstance random_unplanted(std::size_t n, std::size_t k, std::uint64_t seed)
{
    auto inst = gen_random(n, k, seed);
    SplitMix64 rng(seed ^ 0x5555);
    BitVector t(k);
    for (std::size_t j = 0; j < k; ++j)
        t.set(j, rng.next_bit());
    return SbxorInstance(inst.rows, t);
}

}  // namespace

TEST_CASE("xor fold")
{
    CHECK(xor_fold({bv("100"), bv("101")}) == bv("001"));
    CHECK(xor_fold({bv("1101"), bv("1101")}).none());
    CHECK(xor_fold({bv("100"), bv("101"), bv("110")}) == bv("111"));
    CHECK_THROWS_AS(xor_fold({}), rejected_input);
    CHECK_THROWS_AS(xor_fold({bv("10"), bv("101")}), rejected_input);
    std::mt19937 g(1);
    auto inst = gen_random(12, 40, 9);
    auto rows = inst.rows;
    const auto base = xor_fold(rows);
    for (int t = 0; t < 20; ++t) {
        std::shuffle(rows.begin(), rows.end(), g);
        CHECK(xor_fold(rows) == base);
    }
}

TEST_CASE("canonical generator")
{
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const std::size_t n = 2 + seed % 19;
        auto inst = gen_canonical(n, seed);
        REQUIRE(inst.n() == n);
        REQUIRE(inst.k() == n);
        REQUIRE(inst.hidden_selection.has_value());
        REQUIRE_FALSE(inst.hidden_selection->none());
        REQUIRE(check(inst, *inst.hidden_selection));
    }
    auto a = gen_canonical(8, 77), b = gen_canonical(8, 77);
    CHECK(a.rows == b.rows);
    CHECK(a.target == b.target);
    CHECK_THROWS_AS(gen_canonical(1, 0), rejected_input);
    // With n = 2 the stream often starts with an empty selection or equal rows.
    for (std::uint64_t seed = 0; seed < 200; ++seed)
        CHECK(check(gen_canonical(2, seed), *gen_canonical(2, seed).hidden_selection));
}

TEST_CASE("check")
{
    auto inst = gen_canonical(10, 4);
    const auto& sel = *inst.hidden_selection;
    CHECK(check(inst, sel));
    for (std::size_t i = 0; i < inst.n(); ++i) {
        auto s = sel;
        s.flip(i);
        if (!s.none())
            CHECK_FALSE(check(inst, s));
    }
    CHECK_FALSE(check(inst, BitVector(10)));
    CHECK_THROWS_AS(check(inst, BitVector(9)), rejected_input);
    CHECK_THROWS_AS(SbxorInstance({bv("10"), bv("10")}, bv("00")), rejected_input);
}

TEST_CASE("brute force")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto inst = gen_canonical(12, seed);
        auto w = solve_bruteforce(inst);
        REQUIRE(w.has_value());
        CHECK(check(inst, *w));
        CHECK(solve_bruteforce_serial(inst) == w);
    }
    std::vector<BitVector> basis;
    for (std::size_t i = 0; i < 6; ++i) {
        BitVector e(6);
        e.set(i);
        basis.push_back(e);
    }
    auto t = bv("101101");
    CHECK(solve_bruteforce(SbxorInstance(basis, t)) == t);
    CHECK(solve_gf2(SbxorInstance(basis, t)) == t);
    // Rows span only the first two coordinates.
    SbxorInstance deficient({bv("1000"), bv("0100"), bv("1100")}, bv("0010"));
    CHECK_FALSE(solve_bruteforce(deficient).has_value());
    CHECK_FALSE(solve_gf2(deficient).has_value());
}

TEST_CASE("gf2 agrees with brute force")
{
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const std::size_t n = 1 + seed % 10, k = 1 + (seed / 10) % 10;
        if (k < 4 && n > (1U << k))
            continue;
        auto inst = random_unplanted(n, k, seed);
        auto g = solve_gf2(inst);
        auto b = solve_bruteforce(inst);
        REQUIRE(g.has_value() == b.has_value());
        REQUIRE(g.has_value() == oracle::xor_yes(row_words(inst), inst.target.word(0)));
        if (g)
            REQUIRE(check(inst, *g));
    }
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto inst = gen_random(16, 16, seed);
        REQUIRE(solve_gf2(inst).has_value() == solve_bruteforce(inst).has_value());
    }
}

TEST_CASE("gf2 zero target needs a dependent subset")
{
    SbxorInstance indep({bv("100"), bv("010")}, bv("000"));
    CHECK_FALSE(solve_gf2(indep).has_value());
    CHECK_FALSE(solve_bruteforce(indep).has_value());
    SbxorInstance dep({bv("100"), bv("010"), bv("110")}, bv("000"));
    auto w = solve_gf2(dep);
    REQUIRE(w.has_value());
    CHECK(w->str() == "111");
}

TEST_CASE("full-rank rows are always solvable")
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        std::vector<BitVector> rows;
        for (std::size_t i = 0; i < 8; ++i) {
            BitVector r(8);
            r.set(i);
            for (std::size_t j = i + 1; j < 8; ++j)
                r.set(j, SplitMix64(seed * 100 + i * 10 + j).next_bit());
            rows.push_back(r);
        }
        SplitMix64 rng(seed);
        BitVector t = BitVector::from_word(rng.below(255) + 1, 8);
        CHECK(solve_gf2(SbxorInstance(rows, t)).has_value());
    }
}

TEST_CASE("serial and parallel xor search agree")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto inst = random_unplanted(18, 20, seed);
        auto rows = row_words(inst);
        CHECK(kernels::xor_search_serial(rows, inst.target.word(0)) ==
              kernels::xor_search_parallel(rows, inst.target.word(0)));
    }
}

TEST_CASE("mmk encryption")
{
    auto a = bv("10110"), b = bv("01100"), m = bv("11111");
    CHECK(mmk_decrypt({a}, mmk_encrypt({a}, m)) == m);
    CHECK(mmk_encrypt({a, b}, m) == (a ^ b ^ m));
    CHECK(mmk_encrypt({b, a}, m) == mmk_encrypt({a, b}, m));
    CHECK(mmk_encrypt({}, m) == m);
    CHECK_THROWS_AS(mmk_encrypt({bv("1")}, m), rejected_input);
}

TEST_CASE("absorb")
{
    auto inst = gen_canonical(16, 1);
    CHECK(absorb(inst, inst.target, 5).rows == inst.rows);
    SplitMix64 rng(99);
    for (int t = 0; t < 50; ++t) {
        BitVector m(16);
        for (std::size_t j = 0; j < 16; ++j)
            m.set(j, rng.next_bit());
        auto out = absorb(inst, m, rng.next());
        CHECK(out.target == m);
        CHECK(check(out, *out.hidden_selection));
        std::size_t flips = 0;
        for (std::size_t i = 0; i < 16; ++i)
            flips += hamming(inst.rows[i], out.rows[i]);
        CHECK(flips == hamming(inst.target, m));
        for (std::size_t i = 0; i < 16; ++i)
            if (!inst.hidden_selection->get(i))
                CHECK(out.rows[i] == inst.rows[i]);
    }
    SbxorInstance bare({bv("10"), bv("01")}, bv("11"));
    CHECK_THROWS_AS(absorb(bare, bv("00"), 1), rejected_input);
}

TEST_CASE("sat encoding of the worked example")
{
    auto inst = fixtures::xorsat_example();
    auto f = sat_encode(inst);
    REQUIRE(f.blocks.size() == 4);
    CHECK(f.str(f.blocks[0].second) ==
          "((b_1_1 & ~b_1_2 & ~b_1_3) & (b_2_1 & ~b_2_2 & b_2_3) & (b_3_1 & b_3_2 & ~b_3_3) & "
          "(~b_c_1 & b_c_2 & b_c_3))");
    CHECK(f.str(f.blocks[3].second) ==
          "((~(y_1_1 <-> y_2_1) | ~(y_1_2 <-> y_2_2) | ~(y_1_3 <-> y_2_3)) & "
          "(~(y_1_1 <-> y_3_1) | ~(y_1_2 <-> y_3_2) | ~(y_1_3 <-> y_3_3)) & "
          "(~(y_2_1 <-> y_3_1) | ~(y_2_2 <-> y_3_2) | ~(y_2_3 <-> y_3_3)))");
    CHECK(f.var_count() == 21);
    CHECK(oracle::satisfiable_exhaustive(f));
    CHECK(solve_bruteforce(inst).has_value());
    auto cnf = to_cnf(f);
    CHECK(oracle::dpll(cnf.num_vars, cnf.clauses));
}

TEST_CASE("sat encoding is equisatisfiable with the decision")
{
    int yes = 0, no = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto inst = random_unplanted(3, 3, seed);
        auto f = sat_encode(inst);
        const bool decision = solve_bruteforce(inst).has_value();
        REQUIRE(oracle::satisfiable_exhaustive(f) == decision);
        auto cnf = to_cnf(f);
        REQUIRE(oracle::dpll(cnf.num_vars, cnf.clauses) == decision);
        (decision ? yes : no)++;
    }
    CHECK(yes > 0);
    CHECK(no > 0);
    SbxorInstance outside({bv("100"), bv("010")}, bv("001"));
    CHECK_FALSE(oracle::satisfiable_exhaustive(sat_encode(outside)));
}

TEST_CASE("sat encoding with one key")
{
    auto f = sat_encode(SbxorInstance({bv("10")}, bv("10")));
    const auto& p2 = f.node(f.blocks[1].second);
    CHECK(p2.kids.size() == 1);
    CHECK(f.str(f.blocks[1].second) == "(((y_1_1 <-> b_c_1) & (y_1_2 <-> b_c_2)))");
    CHECK(oracle::satisfiable_exhaustive(f));
    CHECK_FALSE(oracle::satisfiable_exhaustive(sat_encode(SbxorInstance({bv("10")}, bv("01")))));
    CHECK_THROWS_AS(sat_encode(gen_random(9, 4, 1)), budget_exceeded);
}

TEST_CASE("cnf conversion")
{
    PropFormula f;
    int x = f.declare("x");
    f.set_root(f.var(x));
    auto cnf = to_cnf(f);
    CHECK(cnf.clauses.size() == 1);
    CHECK(cnf.dimacs() == "p cnf 1 1\n1 0\n");
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::uint64_t seed = 0; seed < 4; ++seed) {
                if (n > (1U << k))
                    continue;
                auto g = sat_encode(random_unplanted(n, k, seed));
                auto c = to_cnf(g);
                REQUIRE(oracle::dpll(c.num_vars, c.clauses) == oracle::satisfiable_exhaustive(g));
                std::size_t edges = 0;
                for (std::size_t id = 0; id < g.node_count(); ++id)
                    edges += g.node(static_cast<int>(id)).kids.size();
                CHECK(c.clauses.size() <= 4 * g.node_count() + edges + 1);
            }
    PropFormula empty_and;
    empty_and.declare("x");
    empty_and.set_root(empty_and.land({}));
    auto ce = to_cnf(empty_and);
    CHECK(oracle::dpll(ce.num_vars, ce.clauses));
}

TEST_CASE("closed-form entropy table")
{
    auto x = logic_entropy(LogicOp::xor_, EntropyMode::single_bit);
    CHECK(x.h == 1.0);
    CHECK(x.delta == -1.0);
    auto o = logic_entropy(LogicOp::or_, EntropyMode::single_bit);
    CHECK(o.h == doctest::Approx(0.811278).epsilon(1e-6));
    CHECK(o.delta == doctest::Approx(-1.188722).epsilon(1e-6));
    CHECK(logic_entropy(LogicOp::and_, EntropyMode::single_bit).h == o.h);
    CHECK(logic_entropy(LogicOp::xor_, EntropyMode::vector_chain, 7).delta == -6.0);
    CHECK(logic_entropy(LogicOp::or_, EntropyMode::vector_chain, 20).h < 1e-4);
    CHECK(logic_entropy(LogicOp::xor_, EntropyMode::bitwise_pair, 16).delta == -16.0);
    CHECK(logic_entropy(LogicOp::or_, EntropyMode::bitwise_pair, 10).h == doctest::Approx(8.11278).epsilon(1e-5));
    CHECK(logic_entropy(LogicOp::xor_, EntropyMode::bitwise_set, 8, 5).delta == 8.0 - 40.0);
    CHECK(logic_entropy(LogicOp::and_, EntropyMode::bitwise_set, 8, 2).h ==
          doctest::Approx(logic_entropy(LogicOp::and_, EntropyMode::bitwise_pair, 8).h));
}

TEST_CASE("entropy estimates")
{
    SplitMix64 rng(17);
    CHECK(std::abs(mc_entropy_bit(LogicOp::xor_, 1000000, rng) - 1.0) < 0.01);
    CHECK(std::abs(mc_entropy_bit(LogicOp::or_, 1000000, rng) - 0.811278) < 0.01);
    CHECK(std::abs(mc_entropy_bitwise(LogicOp::xor_, 16, 1000000, rng) - 16.0) < 0.05);
    CHECK(std::abs(mc_entropy_bitwise(LogicOp::and_, 8, 1000000, rng) - 8 * 0.811278) < 0.05);
}
