#include "dit/sbxor.hpp"

#include <algorithm>
#include <set>

#include "dit/errors.hpp"
#include "dit/kernels.hpp"
#include "dit/prng.hpp"

namespace dit {

namespace {

// Bits of successive generator words, least significant first.
class BitStream {
public:
    explicit BitStream(std::uint64_t seed) : rng_(seed) {}

    bool next()
    {
        if (left_ == 0) {
            word_ = rng_.next();
            left_ = 64;
        }
        bool b = word_ & 1U;
        word_ >>= 1;
        --left_;
        return b;
    }

    BitVector take(std::size_t len)
    {
        BitVector v(len);
        for (std::size_t i = 0; i < len; ++i)
            v.set(i, next());
        return v;
    }

private:
    SplitMix64 rng_;
    std::uint64_t word_ = 0;
    int left_ = 0;
};

bool distinct(const std::vector<BitVector>& rows)
{
    std::set<BitVector> seen(rows.begin(), rows.end());
    return seen.size() == rows.size();
}

std::vector<std::uint64_t> row_words(const SbxorInstance& inst)
{
    if (inst.k() > 64)
        throw rejected_input("brute force packs rows into 64-bit words; k must be <= 64");
    std::vector<std::uint64_t> w;
    for (const auto& r : inst.rows)
        w.push_back(r.word_count() ? r.word(0) : 0);
    return w;
}

BitVector mask_to_selection(std::uint64_t mask, std::size_t n)
{
    BitVector sel(n);
    for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1U)
            sel.set(i);
    return sel;
}

std::optional<BitVector> bruteforce(const SbxorInstance& inst, bool parallel)
{
    inst.validate();
    if (inst.n() > xor_bruteforce_bound)
        throw budget_exceeded("brute force limited to n <= " + std::to_string(xor_bruteforce_bound));
    auto rows = row_words(inst);
    const std::uint64_t t = inst.k() ? inst.target.word(0) : 0;
    auto m = parallel ? kernels::xor_search_parallel(rows, t) : kernels::xor_search_serial(rows, t);
    if (!m)
        return std::nullopt;
    BitVector sel = mask_to_selection(*m, inst.n());
    if (!check(inst, sel))
        throw std::logic_error("brute force produced an invalid selection");
    return sel;
}

}  // namespace

SbxorInstance::SbxorInstance(std::vector<BitVector> r, BitVector t, std::optional<BitVector> hidden)
    : rows(std::move(r)), target(std::move(t)), hidden_selection(std::move(hidden))
{
    validate();
}

void SbxorInstance::validate() const
{
    if (rows.empty())
        throw rejected_input("instance needs at least one row");
    for (const auto& r : rows)
        if (r.size() != target.size())
            throw rejected_input("row length differs from target length");
    if (!distinct(rows))
        throw rejected_input("instance rows must be pairwise distinct");
    if (hidden_selection && hidden_selection->size() != rows.size())
        throw rejected_input("selection length differs from row count");
}

BitVector xor_fold(const std::vector<BitVector>& rows)
{
    if (rows.empty())
        throw rejected_input("fold of an empty sequence");
    BitVector acc = rows.front();
    for (std::size_t i = 1; i < rows.size(); ++i)
        acc ^= rows[i];
    return acc;
}

BitVector xor_selected(const std::vector<BitVector>& rows, const BitVector& sel)
{
    if (sel.size() != rows.size())
        throw rejected_input("selection length differs from row count");
    std::vector<BitVector> picked;
    for (auto i : sel.ones())
        picked.push_back(rows[i]);
    return xor_fold(picked);
}

SbxorInstance gen_canonical(std::size_t n, std::uint64_t seed)
{
    if (n < 2)
        throw rejected_input("canonical instances need n >= 2");
    BitStream bits(seed);
    for (;;) {
        std::vector<BitVector> rows;
        for (std::size_t i = 0; i < n; ++i)
            rows.push_back(bits.take(n));
        BitVector sel = bits.take(n);
        if (sel.none() || !distinct(rows))
            continue;
        BitVector t = xor_selected(rows, sel);
        return SbxorInstance(std::move(rows), std::move(t), std::move(sel));
    }
}

SbxorInstance gen_random(std::size_t n, std::size_t k, std::uint64_t seed)
{
    if (n == 0 || k == 0)
        throw rejected_input("n and k must be at least 1");
    if (k < 64 && n > (std::size_t{1} << k))
        throw rejected_input("cannot draw that many distinct rows");
    BitStream bits(seed);
    std::vector<BitVector> rows;
    std::set<BitVector> seen;
    while (rows.size() < n) {
        BitVector r = bits.take(k);
        if (seen.insert(r).second)
            rows.push_back(std::move(r));
    }
    BitVector sel;
    do {
        sel = bits.take(n);
    } while (sel.none());
    BitVector t = xor_selected(rows, sel);
    return SbxorInstance(std::move(rows), std::move(t), std::move(sel));
}

bool check(const SbxorInstance& inst, const BitVector& sel)
{
    if (sel.size() != inst.n())
        throw rejected_input("selection length differs from row count");
    if (sel.none())
        return false;
    return xor_selected(inst.rows, sel) == inst.target;
}

std::optional<BitVector> solve_bruteforce(const SbxorInstance& inst) { return bruteforce(inst, true); }

std::optional<BitVector> solve_bruteforce_serial(const SbxorInstance& inst)
{
    return bruteforce(inst, false);
}

std::optional<BitVector> solve_gf2(const SbxorInstance& inst)
{
    inst.validate();
    const std::size_t n = inst.n(), k = inst.k();
    // Equation j: sum_i sel_i * rows[i][j] = target[j]. Column n is the rhs.
    std::vector<BitVector> eq(k, BitVector(n + 1));
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            if (inst.rows[i].get(j))
                eq[j].set(i);
        eq[j].set(n, inst.target.get(j));
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < k; ++c) {
        std::size_t p = r;
        while (p < k && !eq[p].get(c))
            ++p;
        if (p == k)
            continue;
        std::swap(eq[p], eq[r]);
        for (std::size_t q = 0; q < k; ++q)
            if (q != r && eq[q].get(c))
                eq[q] ^= eq[r];
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t q = r; q < k; ++q)
        if (eq[q].get(n))
            return std::nullopt;

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col)
        is_pivot[c] = true;
    BitVector sel(n);
    // Reduced echelon form: pivot var = rhs xor (free vars in its row).
    auto back_substitute = [&]() {
        for (std::size_t q = 0; q < r; ++q) {
            bool v = eq[q].get(n);
            for (std::size_t c = 0; c < n; ++c)
                if (!is_pivot[c] && eq[q].get(c) && sel.get(c))
                    v = !v;
            sel.set(pivot_col[q], v);
        }
    };
    back_substitute();
    if (sel.none()) {
        std::size_t free = n;
        for (std::size_t c = 0; c < n; ++c)
            if (!is_pivot[c]) {
                free = c;
                break;
            }
        if (free == n)
            return std::nullopt;
        sel.set(free);
        back_substitute();
    }
    if (!check(inst, sel))
        throw std::logic_error("elimination produced an invalid selection");
    return sel;
}

BitVector mmk_encrypt(const std::vector<BitVector>& keys, const BitVector& message)
{
    BitVector c = message;
    for (const auto& key : keys)
        c ^= key;
    return c;
}

BitVector mmk_decrypt(const std::vector<BitVector>& keys, const BitVector& cipher)
{
    return mmk_encrypt(keys, cipher);
}

SbxorInstance absorb(const SbxorInstance& inst, const BitVector& message, std::uint64_t seed)
{
    inst.validate();
    if (!inst.hidden_selection)
        throw rejected_input("absorb needs the instance's selection vector");
    if (message.size() != inst.k())
        throw rejected_input("message length differs from row length");
    const std::vector<std::size_t> selected = inst.hidden_selection->ones();
    SbxorInstance out = inst;
    SplitMix64 rng(seed);
    for (std::size_t j = 0; j < inst.k(); ++j) {
        if (out.target.get(j) == message.get(j))
            continue;
        if (selected.empty())
            throw rejected_input("no selected rows to absorb the message");
        const std::size_t start = rng.below(selected.size());
        bool done = false;
        for (std::size_t a = 0; a < selected.size() && !done; ++a) {
            const std::size_t row = selected[(start + a) % selected.size()];
            out.rows[row].flip(j);
            if (std::count(out.rows.begin(), out.rows.end(), out.rows[row]) == 1)
                done = true;
            else
                out.rows[row].flip(j);
        }
        if (!done)
            throw rejected_input("every flip in column " + std::to_string(j) +
                                 " would duplicate a row");
        out.target.flip(j);
    }
    return out;
}

}  // namespace dit
