#pragma once

#include <optional>

#include "dit/nat.hpp"
#include "dit/numeric.hpp"
#include "dit/pairing.hpp"

namespace dit {

/// Rate function r(x) of an elastic dilation: c, c*x or c*x^k.
struct DilationSpec {
    enum class Rate { constant, linear, polynomial };

    Rate rate = Rate::constant;
    Nat c = 1;
    unsigned long k = 1;  // exponent, polynomial rate only

    static DilationSpec constant(const Nat& c);
    static DilationSpec linear(const Nat& c);
    static DilationSpec polynomial(const Nat& c, unsigned long k);

    /// Exponent e with r(x) = c * x^e.
    unsigned long exponent() const;
    Nat eval(const Nat& x) const;
};

/// (x*r(x) + y mod r(x), y div r(x)).
Point dilate(const DilationSpec& spec, const Point& p);
std::optional<Point> undilate(const DilationSpec& spec, const Point& q);

/// pair . dilate . unpair
Nat induced_endo(const DilationSpec& spec, const Nat& n);

/// info(pair(dilate(p))) - info(x) - info(y).
InfoValue dilation_efficiency(const DilationSpec& spec, const Point& p);

/// log2 of (c^2+h)^2 / (c^2 (1+h)^2), the large-x limit of
/// pair(c x, h x / c) / pair(x, h x).
InfoValue reference_ratio(const Nat& c, const mpq_class& h);

/// The same ratio evaluated exactly at a finite x, with the pairing
/// polynomial applied to rational coordinates.
mpq_class empirical_reference_ratio(const Nat& c, const mpq_class& h, const Nat& x);

InfoValue log2_rational(const mpq_class& q);

}  // namespace dit
