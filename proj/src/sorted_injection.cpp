#include "dit/sorted_injection.hpp"

#include <algorithm>
#include <functional>

#include "dit/errors.hpp"

namespace dit {

ZetaKind parse_zeta_kind(const std::string& name)
{
    if (name == "cardinality") return ZetaKind::cardinality;
    if (name == "sum") return ZetaKind::sum;
    if (name == "product") return ZetaKind::product;
    if (name == "binary") return ZetaKind::binary;
    if (name == "parity") return ZetaKind::parity;
    throw rejected_input("unknown zeta kind: " + name);
}

std::string to_string(ZetaKind kind)
{
    switch (kind) {
    case ZetaKind::cardinality: return "cardinality";
    case ZetaKind::sum: return "sum";
    case ZetaKind::product: return "product";
    case ZetaKind::binary: return "binary";
    case ZetaKind::parity: return "parity";
    }
    return "?";
}

std::uint64_t CensusTable::total() const
{
    std::uint64_t t = 0;
    for (const auto& [v, c] : counts)
        t += c;
    return t;
}

std::vector<Nat> CensusTable::expand() const
{
    std::vector<Nat> out;
    for (const auto& [v, c] : counts)
        for (std::uint64_t i = 0; i < c; ++i)
            out.push_back(v);
    return out;
}

Nat zeta_eval(ZetaKind kind, const FinSet& s)
{
    if (s.empty())
        throw rejected_input("zeta of the empty set");
    switch (kind) {
    case ZetaKind::cardinality: return Nat(static_cast<unsigned long>(s.size()));
    case ZetaKind::sum:
    case ZetaKind::parity: {
        Nat t = 0;
        for (const Nat& e : s.elems())
            t += e;
        return kind == ZetaKind::sum ? t : Nat(t % 2);
    }
    case ZetaKind::product: {
        Nat t = 1;
        for (const Nat& e : s.elems())
            t *= e;
        return t;
    }
    case ZetaKind::binary: return upsilon(s);
    }
    throw rejected_input("unknown zeta kind");
}

Nat zeta_column(ZetaKind kind, const FinSet& s)
{
    if (kind == ZetaKind::cardinality) {
        if (s.empty())
            throw rejected_input("zeta of the empty set");
        return Nat(static_cast<unsigned long>(s.size() - 1));
    }
    return zeta_eval(kind, s);
}

namespace {

std::uint64_t scan_end(const FinSet& s, std::uint64_t budget)
{
    const Nat n = phi_car_index(s);
    if (n > budget)
        throw budget_exceeded("phi_car index " + to_string(n) + " exceeds scan budget " +
                              std::to_string(budget));
    return n.get_ui();
}

// Visits phi_car indices 0, 1, 2, ... in order. Along a diagonal the column
// (cardinality - 1) falls while the rank rises, and each column sees its
// ranks 0, 1, 2, ... in turn, so every cardinality keeps its current
// colex combination and steps it forward instead of unranking.
class PhiCarWalk {
public:
    using Combo = std::vector<std::uint32_t>;

    // Calls visit(index, combo) for every index below end whose
    // cardinality passes keep(k).
    template <class Keep, class Visit>
    void run(std::uint64_t end, Keep keep, Visit visit)
    {
        for (; next_ < end; ++next_) {
            const std::uint64_t k = d_ - y_ + 1;
            if (keep(k)) {
                Combo& c = state(k);
                visit(next_, c);
                advance(c);
            }
            if (y_ == d_) {
                ++d_;
                y_ = 0;
            } else {
                ++y_;
            }
        }
    }

private:
    Combo& state(std::uint64_t k)
    {
        if (combos_.size() <= k)
            combos_.resize(k + 1);
        Combo& c = combos_[k];
        if (c.empty())
            for (std::uint32_t i = 0; i < k; ++i)
                c.push_back(i);
        return c;
    }

    // Colex successor: bump the lowest element that has room, reset the rest.
    static void advance(Combo& c)
    {
        std::size_t j = 0;
        while (j + 1 < c.size() && c[j] + 1 == c[j + 1])
            ++j;
        ++c[j];
        for (std::size_t i = 0; i < j; ++i)
            c[i] = static_cast<std::uint32_t>(i);
    }

    std::uint64_t next_ = 0, d_ = 0, y_ = 0;
    std::vector<Combo> combos_;
};

Nat zeta_of(ZetaKind kind, const PhiCarWalk::Combo& c)
{
    switch (kind) {
    case ZetaKind::cardinality: return Nat(static_cast<unsigned long>(c.size()));
    case ZetaKind::sum:
    case ZetaKind::parity: {
        std::uint64_t t = 0;
        for (auto e : c)
            t += e;
        return Nat(static_cast<unsigned long>(kind == ZetaKind::sum ? t : t % 2));
    }
    case ZetaKind::product: {
        if (c.front() == 0)
            return 0;
        Nat t = 1;
        for (auto e : c)
            t *= static_cast<unsigned long>(e);
        return t;
    }
    case ZetaKind::binary: {
        Nat t = 0;
        for (auto e : c)
            mpz_setbit(t.get_mpz_t(), e);
        return t;
    }
    }
    throw rejected_input("unknown zeta kind");
}

// False when no k-element set can have zeta value z.
bool cardinality_can_reach(ZetaKind kind, std::uint64_t k, const Nat& z)
{
    switch (kind) {
    case ZetaKind::cardinality: return z == static_cast<unsigned long>(k);
    case ZetaKind::sum: return Nat(static_cast<unsigned long>(k)) * (k - 1) / 2 <= z;
    case ZetaKind::product: {
        if (z == 0)
            return true;
        Nat f = 1;
        for (std::uint64_t i = 2; i <= k && f <= z; ++i)
            f *= static_cast<unsigned long>(i);
        return f <= z;
    }
    case ZetaKind::binary: return k <= bit_length(z);
    case ZetaKind::parity: return true;
    }
    return true;
}

}  // namespace

Nat theta_index(ZetaKind kind, const FinSet& s, std::uint64_t budget)
{
    const std::uint64_t n = scan_end(s, budget);
    const Nat z = zeta_eval(kind, s);
    std::uint64_t count = 0;
    PhiCarWalk walk;
    walk.run(
        n, [&](std::uint64_t k) { return cardinality_can_reach(kind, k, z); },
        [&](std::uint64_t, const PhiCarWalk::Combo& c) { count += zeta_of(kind, c) == z; });
    return Nat(static_cast<unsigned long>(count));
}

void ThetaIndexer::extend_to(std::uint64_t end)
{
    if (end <= scanned_)
        return;
    // The walk restarts from 0 and only records the new tail; cheaper than
    // keeping the per-cardinality state alive between calls.
    PhiCarWalk walk;
    const std::uint64_t from = scanned_;
    walk.run(
        end, [](std::uint64_t) { return true; },
        [&](std::uint64_t i, const PhiCarWalk::Combo& c) {
            if (i >= from)
                seen_[zeta_of(kind_, c)].push_back(i);
        });
    scanned_ = end;
}

Nat ThetaIndexer::theta(const FinSet& s)
{
    const std::uint64_t n = scan_end(s, budget_);
    const Nat z = zeta_eval(kind_, s);
    std::lock_guard lock(mu_);
    extend_to(n);
    auto it = seen_.find(z);
    if (it == seen_.end())
        return 0;
    const auto& v = it->second;
    return Nat(static_cast<unsigned long>(std::lower_bound(v.begin(), v.end(), n) - v.begin()));
}

std::uint64_t ThetaIndexer::scanned() const
{
    std::lock_guard lock(mu_);
    return scanned_;
}

Nat phi_zeta(ZetaKind kind, const FinSet& s, std::uint64_t budget)
{
    return pair(zeta_column(kind, s), theta_index(kind, s, budget));
}

Nat phi_zeta(ThetaIndexer& idx, ZetaKind kind, const FinSet& s)
{
    return pair(zeta_column(kind, s), idx.theta(s));
}

CensusTable powerset_dilation(const FinSet& base, ZetaKind kind, std::size_t bound)
{
    if (base.size() > bound)
        throw budget_exceeded("base set has " + std::to_string(base.size()) +
                              " elements; bound is " + std::to_string(bound));
    CensusTable table;
    table.universe = "non-empty subsets of " + to_string(base) + " under " + to_string(kind);
    const auto& e = base.elems();
    const std::size_t k = e.size();

    // Accumulator starts at the identity of the operation; count tracks |s|.
    std::function<void(std::size_t, const Nat&, std::size_t)> rec =
        [&](std::size_t i, const Nat& acc, std::size_t count) {
            if (i == k) {
                if (count == 0)
                    return;
                switch (kind) {
                case ZetaKind::cardinality:
                    ++table.counts[Nat(static_cast<unsigned long>(count))];
                    break;
                case ZetaKind::parity: ++table.counts[Nat(acc % 2)]; break;
                default: ++table.counts[acc]; break;
                }
                return;
            }
            rec(i + 1, acc, count);
            Nat next;
            switch (kind) {
            case ZetaKind::product: next = acc * e[i]; break;
            case ZetaKind::binary: next = acc; mpz_setbit(next.get_mpz_t(), e[i].get_ui()); break;
            default: next = acc + e[i]; break;
            }
            rec(i + 1, next, count + 1);
        };
    if (kind == ZetaKind::binary)
        for (const Nat& x : e)
            if (!x.fits_ulong_p())
                throw rejected_input("element too large for a binary number");
    rec(0, kind == ZetaKind::product ? Nat(1) : Nat(0), 0);
    return table;
}

DensityCensus density_census(const std::vector<Nat>& values, const Nat& n)
{
    if (n < 1)
        throw rejected_input("n must be at least 1");
    std::vector<Nat> v;
    for (const Nat& x : values)
        if (x >= 1 && x <= n)
            v.push_back(x);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    DensityCensus out;
    out.c = static_cast<unsigned long>(v.size());
    mpq_class ratio(out.c, n);
    ratio.canonicalize();
    out.d = ratio.get_d();
    if (!v.empty())
        out.decay = 1.0 / ratio.get_d();
    return out;
}

DensityCensus density_census(const CensusTable& values, const Nat& n)
{
    std::vector<Nat> v;
    for (const auto& [x, c] : values.counts)
        v.push_back(x);
    return density_census(v, n);
}

}  // namespace dit
