#include "dit/setcodec.hpp"

#include <algorithm>

#include "dit/errors.hpp"

namespace dit {

namespace {

constexpr std::size_t max_unrank_cardinality = std::size_t{1} << 24;

// Largest c with C(c,i) <= idx. C(i-1,i) = 0, so c >= i-1.
Nat largest_binom_below(const Nat& idx, unsigned long i)
{
    Nat lo = i - 1;
    Nat hi = std::max<unsigned long>(i, 1);
    while (binom(hi, Nat(i)) <= idx) {
        lo = hi;
        hi *= 2;
    }
    // invariant: C(lo,i) <= idx < C(hi,i)
    while (hi - lo > 1) {
        Nat mid = (lo + hi) / 2;
        if (binom(mid, Nat(i)) <= idx)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

FinSet::FinSet(std::vector<Nat> ascending) : elems_(std::move(ascending))
{
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        require_nonnegative(elems_[i], "set element");
        if (i > 0 && !(elems_[i - 1] < elems_[i]))
            throw rejected_input("set elements must be strictly ascending");
    }
}

FinSet FinSet::of(std::vector<Nat> elems)
{
    std::sort(elems.begin(), elems.end());
    if (std::adjacent_find(elems.begin(), elems.end()) != elems.end())
        throw rejected_input("duplicate set element");
    return FinSet(std::move(elems));
}

FinSet FinSet::of(std::initializer_list<unsigned long> elems)
{
    std::vector<Nat> v;
    for (auto e : elems)
        v.emplace_back(e);
    return of(std::move(v));
}

std::string to_string(const FinSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ',';
        out += to_string(s.elems()[i]);
    }
    return out + "}";
}

Nat combinadic_rank(const FinSet& s)
{
    if (s.empty())
        throw rejected_input("combinadic rank of the empty set");
    Nat r = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        r += binom(s.elems()[i], Nat(static_cast<unsigned long>(i + 1)));
    return r;
}

FinSet combinadic_unrank(std::size_t k, const Nat& idx)
{
    if (k == 0)
        throw rejected_input("cardinality must be at least 1");
    require_nonnegative(idx, "index");
    if (k > max_unrank_cardinality)
        throw budget_exceeded("cardinality too large to materialize");
    std::vector<Nat> out(k);
    Nat rest = idx;
    for (std::size_t i = k; i >= 1; --i) {
        Nat c = largest_binom_below(rest, static_cast<unsigned long>(i));
        rest -= binom(c, Nat(static_cast<unsigned long>(i)));
        out[i - 1] = std::move(c);
    }
    return FinSet(std::move(out));
}

Point phi_car(const FinSet& s)
{
    if (s.empty())
        throw rejected_input("the empty set has no place in the plane");
    return Point(Nat(static_cast<unsigned long>(s.size() - 1)), combinadic_rank(s));
}

Nat phi_car_index(const FinSet& s) { return pair(phi_car(s)); }

FinSet phi_car_inv(const Nat& n)
{
    Point p = unpair(n);
    if (p.x >= max_unrank_cardinality)
        throw budget_exceeded("cardinality too large to materialize");
    return combinadic_unrank(p.x.get_ui() + 1, p.y);
}

Nat upsilon(const FinSet& s)
{
    Nat r = 0;
    for (const Nat& e : s.elems()) {
        if (!e.fits_ulong_p())
            throw rejected_input("element too large for a binary number");
        mpz_setbit(r.get_mpz_t(), e.get_ui());
    }
    return r;
}

FinSet upsilon_inv(const Nat& n)
{
    require_nonnegative(n, "n");
    std::vector<Nat> out;
    const std::size_t len = bit_length(n);
    for (std::size_t i = 0; i < len; ++i)
        if (mpz_tstbit(n.get_mpz_t(), i))
            out.emplace_back(static_cast<unsigned long>(i));
    return FinSet(std::move(out));
}

Nat endo(const Nat& n) { return upsilon(phi_car_inv(n)); }

InfoValue cond_subset_info(const Nat& n, const Nat& k)
{
    if (k > n)
        throw rejected_input("cannot choose more elements than available");
    return info(binom(n, k));
}

InfoValue car_bin_divergence(const FinSet& s)
{
    return info(phi_car_index(s)) - info(upsilon(s));
}

FinSet string_typical_set(std::size_t k, SplitMix64& rng)
{
    if (k == 0)
        throw rejected_input("k must be at least 1");
    const std::size_t n = 2 * k;
    std::vector<bool> in(n, false);
    std::size_t count = 1;  // n itself
    while (count < k) {
        for (std::size_t i = 0; i < n && count < k; ++i) {
            if (!in[i] && rng.next_bit()) {
                in[i] = true;
                ++count;
            }
        }
    }
    std::vector<Nat> elems;
    for (std::size_t i = 0; i < n; ++i)
        if (in[i])
            elems.emplace_back(static_cast<unsigned long>(i));
    elems.emplace_back(static_cast<unsigned long>(n));
    return FinSet(std::move(elems));
}

FinSet charstring_to_set(const CharString& cs)
{
    std::vector<Nat> out;
    for (auto i : cs.ones())
        out.emplace_back(static_cast<unsigned long>(i));
    return FinSet(std::move(out));
}

CharString set_to_charstring(const FinSet& s, std::size_t len)
{
    CharString cs(len);
    for (const Nat& e : s.elems()) {
        if (e >= static_cast<unsigned long>(len))
            throw rejected_input("element outside characteristic string");
        cs.set(e.get_ui());
    }
    return cs;
}

}  // namespace dit
