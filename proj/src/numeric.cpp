#include "dit/numeric.hpp"

#include <cmath>
#include <numeric>

#include "dit/errors.hpp"

namespace dit {

Nat binom(const Nat& n, const Nat& k)
{
    require_nonnegative(n, "n");
    require_nonnegative(k, "k");
    if (k > n)
        return 0;
    // C(n,k) = C(n,n-k); the smaller side always fits a machine word for
    // any n we can afford to store.
    Nat kk = k;
    if (Nat(n - k) < kk)
        kk = n - k;
    if (!kk.fits_ulong_p())
        throw rejected_input("binomial too large");
    Nat r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), kk.get_ui());
    return r;
}

Nat isqrt(const Nat& n)
{
    require_nonnegative(n, "isqrt argument");
    Nat r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

InfoValue info(const Nat& n)
{
    require_nonnegative(n, "info argument");
    if (n <= 1)
        return 0.0;
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log2(mant) + static_cast<double>(exp);
}

std::optional<std::size_t> scale(const Nat& n)
{
    if (sgn(n) <= 0)
        return std::nullopt;
    return bit_length(n) - 1;
}

Dist::Dist(std::vector<double> probs) : probs_(std::move(probs))
{
    if (probs_.empty())
        throw rejected_input("empty distribution");
    double total = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0 && p <= 1.0))
            throw rejected_input("probability outside [0,1]");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw rejected_input("probabilities do not sum to 1");
}

InfoValue shannon_entropy(const Dist& d)
{
    double h = 0.0;
    for (double p : d.probs())
        if (p > 0.0)
            h -= p * std::log2(p);
    return h;
}

InfoValue binary_entropy(double p)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw rejected_input("probability outside [0,1]");
    return shannon_entropy(Dist({p, 1.0 - p}));
}

Nat catalan(unsigned long n)
{
    Nat c = binom(Nat(2 * n), Nat(n));
    return c / (n + 1);
}

Nat stirling2(unsigned long n, unsigned long k)
{
    if (k > n)
        return 0;
    // Row-by-row recurrence S(m,j) = j S(m-1,j) + S(m-1,j-1).
    std::vector<Nat> row(k + 1, 0);
    row[0] = 1;
    for (unsigned long m = 1; m <= n; ++m) {
        for (unsigned long j = std::min(m, k); j >= 1; --j)
            row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

Nat bell(unsigned long n)
{
    Nat b = 0;
    for (unsigned long k = 0; k <= n; ++k)
        b += stirling2(n, k);
    return b;
}

Nat combinatorial_counts(CountKind kind, unsigned long n, std::optional<unsigned long> k)
{
    switch (kind) {
    case CountKind::catalan: return catalan(n);
    case CountKind::bell: return bell(n);
    case CountKind::stirling2:
        if (!k)
            throw rejected_input("stirling2 requires k");
        return stirling2(n, *k);
    }
    throw rejected_input("unknown count kind");
}

InfoValue delta_arith(ArithOp op, const Nat& x, const std::optional<Nat>& y)
{
    require_nonnegative(x, "x");
    if (sgn(x) == 0)
        throw rejected_input("x must be at least 1");
    auto need_y = [&]() -> const Nat& {
        if (!y)
            throw rejected_input("operation needs a second operand");
        require_nonnegative(*y, "y");
        if (sgn(*y) == 0)
            throw rejected_input("y must be at least 1");
        return *y;
    };
    switch (op) {
    case ArithOp::add: {
        const Nat& b = need_y();
        return info(Nat(x + b)) - info(x) - info(b);
    }
    case ArithOp::mul: {
        const Nat& b = need_y();
        return info(Nat(x * b)) - info(x) - info(b);
    }
    case ArithOp::self_add: return info(Nat(2 * x)) - info(x);
    case ArithOp::self_mul: return info(Nat(x * x)) - info(x);
    }
    throw rejected_input("unknown arithmetic op");
}

}  // namespace dit
