#include "dit/dilation.hpp"

#include "dit/errors.hpp"

namespace dit {

namespace {

void require_positive_c(const Nat& c)
{
    if (sgn(c) <= 0)
        throw rejected_input("rate constant must be at least 1");
}

mpq_class rational_pair(const mpq_class& a, const mpq_class& b)
{
    mpq_class s = a + b;
    mpq_class r = s * (s + 1) / 2 + b;
    r.canonicalize();
    return r;
}

}  // namespace

DilationSpec DilationSpec::constant(const Nat& c)
{
    require_positive_c(c);
    return {Rate::constant, c, 0};
}

DilationSpec DilationSpec::linear(const Nat& c)
{
    require_positive_c(c);
    return {Rate::linear, c, 1};
}

DilationSpec DilationSpec::polynomial(const Nat& c, unsigned long k)
{
    require_positive_c(c);
    if (k == 0)
        throw rejected_input("polynomial rate needs exponent k >= 1");
    return {Rate::polynomial, c, k};
}

unsigned long DilationSpec::exponent() const
{
    switch (rate) {
    case Rate::constant: return 0;
    case Rate::linear: return 1;
    case Rate::polynomial: return k;
    }
    return 0;
}

Nat DilationSpec::eval(const Nat& x) const
{
    Nat p;
    mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), exponent());
    return c * p;
}

Point dilate(const DilationSpec& spec, const Point& p)
{
    const Nat r = spec.eval(p.x);
    if (sgn(r) == 0)
        throw rejected_input("rate is zero at this column");
    Nat q, m;
    mpz_fdiv_qr(q.get_mpz_t(), m.get_mpz_t(), p.y.get_mpz_t(), r.get_mpz_t());
    return Point(Nat(p.x * r + m), std::move(q));
}

std::optional<Point> undilate(const DilationSpec& spec, const Point& q)
{
    if (spec.rate == DilationSpec::Rate::constant) {
        Nat x, d;
        mpz_fdiv_qr(x.get_mpz_t(), d.get_mpz_t(), q.x.get_mpz_t(), spec.c.get_mpz_t());
        return Point(std::move(x), Nat(q.y * spec.c + d));
    }
    // Column x occupies [c x^(e+1), c x^(e+1) + c x^e).
    const unsigned long e = spec.exponent();
    Nat base = q.x / spec.c;
    Nat x;
    mpz_root(x.get_mpz_t(), base.get_mpz_t(), e + 1);
    if (sgn(x) == 0)
        return std::nullopt;
    Nat start;
    mpz_pow_ui(start.get_mpz_t(), x.get_mpz_t(), e + 1);
    start *= spec.c;
    Nat d = q.x - start;
    Nat r = spec.eval(x);
    if (d >= r)
        return std::nullopt;
    return Point(std::move(x), Nat(q.y * r + d));
}

Nat induced_endo(const DilationSpec& spec, const Nat& n) { return pair(dilate(spec, unpair(n))); }

InfoValue dilation_efficiency(const DilationSpec& spec, const Point& p)
{
    if (sgn(p.x) == 0 || sgn(p.y) == 0)
        throw rejected_input("dilation efficiency needs x >= 1 and y >= 1");
    return info(pair(dilate(spec, p))) - info(p.x) - info(p.y);
}

InfoValue log2_rational(const mpq_class& q)
{
    if (sgn(q) <= 0)
        throw rejected_input("log of a non-positive rational");
    return info(Nat(q.get_num())) - info(Nat(q.get_den()));
}

InfoValue reference_ratio(const Nat& c, const mpq_class& h)
{
    require_positive_c(c);
    if (sgn(h) <= 0)
        throw rejected_input("h must be positive");
    mpq_class c2(c * c);
    mpq_class num = (c2 + h) * (c2 + h);
    mpq_class den = c2 * (1 + h) * (1 + h);
    mpq_class r = num / den;
    r.canonicalize();
    return log2_rational(r);
}

mpq_class empirical_reference_ratio(const Nat& c, const mpq_class& h, const Nat& x)
{
    require_positive_c(c);
    if (sgn(h) <= 0 || sgn(x) <= 0)
        throw rejected_input("h and x must be positive");
    mpq_class xq(x);
    mpq_class hx = h * xq;
    mpq_class cq(c);
    mpq_class r = rational_pair(cq * xq, hx / cq) / rational_pair(xq, hx);
    r.canonicalize();
    return r;
}

}  // namespace dit
