#include "dit/subset_problems.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>

#include "dit/errors.hpp"
#include "dit/kernels.hpp"
#include "dit/numeric.hpp"
#include "dit/prng.hpp"

namespace dit {

namespace {

// Dense histograms above this many slots fall back to sort-and-count.
constexpr std::uint64_t dense_histogram_limit = std::uint64_t{1} << 25;

std::optional<std::vector<std::uint64_t>> as_u64(const Codebook& cb)
{
    std::vector<std::uint64_t> out;
    Nat total = 0;
    for (const Nat& e : cb.entries) {
        total += e;
        out.push_back(e.fits_ulong_p() ? e.get_ui() : 0);
    }
    if (!fits_u64(total) || total.get_ui() > std::numeric_limits<std::uint64_t>::max() / 2)
        return std::nullopt;
    return out;
}

CharString mask_to_charstring(std::uint64_t mask, std::size_t len)
{
    CharString cs(len);
    for (std::size_t i = 0; i < len; ++i)
        if ((mask >> i) & 1U)
            cs.set(i);
    return cs;
}

void require_length(const Codebook& cb, const CharString& cs)
{
    if (cs.size() != cb.entries.size())
        throw rejected_input("characteristic string length " + std::to_string(cs.size()) +
                             " does not match codebook length " +
                             std::to_string(cb.entries.size()));
}

std::optional<CharString> solve_product(const Codebook& cb, const Nat& target, std::size_t bound)
{
    const std::size_t k = cb.entries.size();
    if (sgn(target) == 0) {
        for (std::size_t i = 0; i < k; ++i)
            if (sgn(cb.entries[i]) == 0) {
                CharString cs(k);
                cs.set(i);
                return cs;
            }
        return std::nullopt;
    }
    std::vector<std::size_t> divisors;
    for (std::size_t i = 0; i < k; ++i)
        if (sgn(cb.entries[i]) > 0 && mpz_divisible_p(target.get_mpz_t(), cb.entries[i].get_mpz_t()))
            divisors.push_back(i);
    if (divisors.size() > bound)
        throw budget_exceeded("product search over " + std::to_string(divisors.size()) +
                              " divisor entries exceeds bound " + std::to_string(bound));
    std::vector<std::size_t> picked;
    std::function<bool(std::size_t, const Nat&)> rec = [&](std::size_t d, const Nat& rest) {
        if (rest == 1 && !picked.empty())
            return true;
        for (std::size_t j = d; j < divisors.size(); ++j) {
            const Nat& e = cb.entries[divisors[j]];
            if (!mpz_divisible_p(rest.get_mpz_t(), e.get_mpz_t()))
                continue;
            picked.push_back(divisors[j]);
            if (rec(j + 1, Nat(rest / e)))
                return true;
            picked.pop_back();
        }
        return false;
    };
    if (!rec(0, target))
        return std::nullopt;
    CharString cs(k);
    for (auto i : picked)
        cs.set(i);
    return cs;
}

std::optional<CharString> solve_parity(const Codebook& cb, const Nat& target)
{
    const std::size_t k = cb.entries.size();
    if (target == 0)
        return CharString(k);
    if (target != 1)
        return std::nullopt;
    for (std::size_t i = 0; i < k; ++i)
        if (mpz_odd_p(cb.entries[i].get_mpz_t())) {
            CharString cs(k);
            cs.set(i);
            return cs;
        }
    return std::nullopt;
}

}  // namespace

Codebook::Codebook(std::vector<Nat> e) : entries(std::move(e))
{
    for (const Nat& x : entries)
        require_nonnegative(x, "codebook entry");
}

Codebook Codebook::of(std::initializer_list<unsigned long> e)
{
    std::vector<Nat> v;
    for (auto x : e)
        v.emplace_back(x);
    return Codebook(std::move(v));
}

SubsetOp parse_subset_op(const std::string& name)
{
    if (name == "sum") return SubsetOp::sum;
    if (name == "product") return SubsetOp::product;
    if (name == "parity") return SubsetOp::parity;
    throw rejected_input("unknown subset op: " + name);
}

std::string to_string(SubsetOp op)
{
    switch (op) {
    case SubsetOp::sum: return "sum";
    case SubsetOp::product: return "product";
    case SubsetOp::parity: return "parity";
    }
    return "?";
}

std::uint64_t SolutionCensus::count(const Nat& target) const
{
    auto it = counts.find(target);
    return it == counts.end() ? 0 : it->second;
}

Codebook gen_scale_free(std::size_t k, std::uint64_t seed)
{
    if (k == 0)
        throw rejected_input("k must be at least 1");
    SplitMix64 rng(seed);
    std::vector<Nat> out;
    for (std::size_t i = 0; i < k; ++i) {
        Nat v;
        do {
            v = rng.upto_pow2(i);
        } while (std::find(out.begin(), out.end(), v) != out.end());
        out.push_back(std::move(v));
    }
    return Codebook(std::move(out));
}

Codebook canonical_template(std::size_t k)
{
    std::vector<Nat> out;
    for (std::size_t i = 0; i < k; ++i)
        out.push_back(Nat(1) << i);
    return Codebook(std::move(out));
}

Selection select_by_charstring(const Codebook& cb, const CharString& cs)
{
    require_length(cb, cs);
    Selection s;
    s.sum = 0;
    for (auto i : cs.ones()) {
        s.entries.push_back(cb.entries[i]);
        s.sum += cb.entries[i];
    }
    return s;
}

Nat subset_value(const Codebook& cb, const CharString& cs, SubsetOp op)
{
    require_length(cb, cs);
    switch (op) {
    case SubsetOp::sum: return select_by_charstring(cb, cs).sum;
    case SubsetOp::parity: return select_by_charstring(cb, cs).sum % 2;
    case SubsetOp::product: {
        if (cs.none())
            throw rejected_input("product of the empty selection");
        Nat p = 1;
        for (auto i : cs.ones())
            p *= cb.entries[i];
        return p;
    }
    }
    throw rejected_input("unknown subset op");
}

bool check(const SubsetProblem& p, const CharString& cs)
{
    require_length(p.codebook, cs);
    if (p.op == SubsetOp::product && cs.none())
        return false;
    return subset_value(p.codebook, cs, p.op) == p.target;
}

std::optional<CharString> solve_sum_exhaustive(const Codebook& cb, const Nat& target,
                                               std::size_t bound)
{
    const std::size_t k = cb.entries.size();
    if (k > bound)
        throw budget_exceeded("codebook of " + std::to_string(k) + " entries exceeds bound " +
                              std::to_string(bound));
    CharString cs(k);
    // Entries are non-negative, so a partial sum above target is dead.
    std::function<bool(std::size_t, const Nat&)> rec = [&](std::size_t i, const Nat& acc) {
        if (acc == target)
            return true;
        if (i == k || acc > target)
            return false;
        cs.set(i);
        if (rec(i + 1, Nat(acc + cb.entries[i])))
            return true;
        cs.set(i, false);
        return rec(i + 1, acc);
    };
    if (rec(0, Nat(0)))
        return cs;
    return std::nullopt;
}

std::optional<CharString> solve_sum_mitm(const Codebook& cb, const Nat& target)
{
    const std::size_t k = cb.entries.size();
    if (k > mitm_bound)
        throw budget_exceeded("meet-in-the-middle limited to " + std::to_string(mitm_bound) +
                              " entries");
    auto e = as_u64(cb);
    if (!e)
        throw rejected_input("codebook sum does not fit 64-bit arithmetic");
    if (!fits_u64(target))
        return std::nullopt;
    const std::uint64_t t = target.get_ui();
    const std::size_t lo_n = k / 2;
    const std::size_t hi_n = k - lo_n;

    // All subset sums of the upper half, sorted with their masks.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> upper;
    upper.reserve(std::size_t{1} << hi_n);
    {
        std::uint64_t mask = 0, s = 0;
        upper.emplace_back(0, 0);
        for (std::uint64_t p = 1; p < (std::uint64_t{1} << hi_n); ++p) {
            const int bit = std::countr_zero(p);
            const std::uint64_t m = std::uint64_t{1} << bit;
            if (mask & m)
                s -= (*e)[lo_n + bit];
            else
                s += (*e)[lo_n + bit];
            mask ^= m;
            upper.emplace_back(s, mask);
        }
    }
    std::sort(upper.begin(), upper.end());

    std::uint64_t mask = 0, s = 0;
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << lo_n); ++p) {
        if (p > 0) {
            const int bit = std::countr_zero(p);
            const std::uint64_t m = std::uint64_t{1} << bit;
            if (mask & m)
                s -= (*e)[bit];
            else
                s += (*e)[bit];
            mask ^= m;
        }
        if (s > t)
            continue;
        auto it = std::lower_bound(upper.begin(), upper.end(),
                                   std::pair<std::uint64_t, std::uint64_t>{t - s, 0});
        if (it != upper.end() && it->first == t - s)
            return mask_to_charstring(mask | (it->second << lo_n), k);
    }
    return std::nullopt;
}

std::optional<CharString> solve(const SubsetProblem& p, std::size_t bound)
{
    const Codebook& cb = p.codebook;
    std::optional<CharString> w;
    switch (p.op) {
    case SubsetOp::sum:
        if (cb.entries.size() <= mitm_bound && as_u64(cb))
            w = solve_sum_mitm(cb, p.target);
        else
            w = solve_sum_exhaustive(cb, p.target, bound);
        break;
    case SubsetOp::product:
        w = solve_product(cb, p.target, std::max(bound, product_divisor_bound));
        break;
    case SubsetOp::parity: w = solve_parity(cb, p.target); break;
    }
    if (w && !check(p, *w))
        throw std::logic_error("solver produced an invalid witness");
    return w;
}

SolutionCensus census(const Codebook& cb, SubsetOp op)
{
    const std::size_t k = cb.entries.size();
    if (k > census_bound)
        throw budget_exceeded("census of " + std::to_string(k) + " entries exceeds bound " +
                              std::to_string(census_bound));
    SolutionCensus out;
    const std::uint64_t n = std::uint64_t{1} << k;

    if (op == SubsetOp::product) {
        std::function<void(std::size_t, const Nat&, bool)> rec = [&](std::size_t i, const Nat& acc,
                                                                     bool any) {
            if (i == k) {
                if (any)
                    ++out.counts[acc];
                return;
            }
            rec(i + 1, acc, any);
            rec(i + 1, Nat(acc * cb.entries[i]), true);
        };
        rec(0, Nat(1), false);
        out.subset_total = n - 1;
        return out;
    }

    auto e = as_u64(cb);
    if (e) {
        std::uint64_t total = 0;
        for (auto v : *e)
            total += v;
        if (total < dense_histogram_limit) {
            auto hist = kernels::sum_histogram_parallel(*e);
            for (std::uint64_t s = 0; s < hist.size(); ++s)
                if (hist[s])
                    out.counts[Nat(static_cast<unsigned long>(s))] += hist[s];
        } else {
            std::vector<std::uint64_t> sums;
            sums.reserve(n);
            std::uint64_t mask = 0, s = 0;
            sums.push_back(0);
            for (std::uint64_t p = 1; p < n; ++p) {
                const int bit = std::countr_zero(p);
                const std::uint64_t m = std::uint64_t{1} << bit;
                if (mask & m)
                    s -= (*e)[bit];
                else
                    s += (*e)[bit];
                mask ^= m;
                sums.push_back(s);
            }
            std::sort(sums.begin(), sums.end());
            for (std::size_t i = 0; i < sums.size();) {
                std::size_t j = i;
                while (j < sums.size() && sums[j] == sums[i])
                    ++j;
                out.counts[Nat(static_cast<unsigned long>(sums[i]))] = j - i;
                i = j;
            }
        }
    } else {
        std::function<void(std::size_t, const Nat&)> rec = [&](std::size_t i, const Nat& acc) {
            if (i == k) {
                ++out.counts[acc];
                return;
            }
            rec(i + 1, acc);
            rec(i + 1, Nat(acc + cb.entries[i]));
        };
        rec(0, Nat(0));
    }
    out.subset_total = n;

    if (op == SubsetOp::parity) {
        SolutionCensus par;
        par.subset_total = n;
        for (const auto& [v, c] : out.counts)
            par.counts[Nat(v % 2)] += c;
        return par;
    }
    return out;
}

std::vector<Nat> interval_lengths(const SolutionCensus& c, const Nat& lo, const Nat& hi)
{
    if (lo > hi)
        throw rejected_input("empty range: lo > hi");
    std::vector<Nat> gaps;
    auto it = c.counts.lower_bound(lo);
    const Nat* prev = nullptr;
    for (; it != c.counts.end() && it->first <= hi; ++it) {
        if (it->second == 0)
            continue;
        if (prev)
            gaps.push_back(it->first - *prev);
        prev = &it->first;
    }
    return gaps;
}

double fractal_density(const SolutionCensus& c, const Nat& n)
{
    if (n < 1)
        throw rejected_input("n must be at least 1");
    std::uint64_t reach = 0;
    for (auto it = c.counts.lower_bound(Nat(1)); it != c.counts.end() && it->first <= n; ++it)
        if (it->second > 0)
            ++reach;
    mpq_class q(Nat(static_cast<unsigned long>(reach)), n);
    q.canonicalize();
    return q.get_d();
}

double mean_solutions(const SolutionCensus& c)
{
    std::uint64_t reach = 0, total = 0;
    for (const auto& [v, k] : c.counts)
        if (k > 0) {
            ++reach;
            total += k;
        }
    return reach == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(reach);
}

std::vector<std::optional<std::size_t>> codebook_scales(const Codebook& cb)
{
    std::vector<std::optional<std::size_t>> out;
    for (const Nat& e : cb.entries)
        out.push_back(scale(e));
    return out;
}

}  // namespace dit
