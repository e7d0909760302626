#include "dit/pairing.hpp"

#include <cmath>

#include "dit/errors.hpp"

namespace dit {

Point::Point(Nat px, Nat py) : x(std::move(px)), y(std::move(py))
{
    require_nonnegative(x, "x");
    require_nonnegative(y, "y");
}

Nat pair(const Point& p)
{
    Nat s = p.x + p.y;
    Nat tri = s * (s + 1) / 2;
    return tri + p.y;
}

TriangularRoot triangular_root(const Nat& z)
{
    require_nonnegative(z, "z");
    Nat w = (isqrt(Nat(8 * z + 1)) - 1) / 2;
    Nat t = w * (w + 1) / 2;
    return {w, t};
}

Point unpair(const Nat& z)
{
    auto [w, t] = triangular_root(z);
    Nat y = z - t;
    Nat x = w - y;
    return Point(std::move(x), std::move(y));
}

Nat taxicab(const Point& a, const Point& b)
{
    Nat dx = a.x - b.x;
    Nat dy = a.y - b.y;
    return Nat(abs(dx)) + Nat(abs(dy));
}

InfoValue path_entropy(const Point& p)
{
    Nat k = p.x + p.y;
    if (sgn(k) == 0)
        throw rejected_input("path entropy undefined at the origin");
    mpq_class px(p.x, k);
    return binary_entropy(px.get_d());
}

InfoValue pairing_efficiency(const Point& p)
{
    if (sgn(p.x) == 0 || sgn(p.y) == 0)
        throw rejected_input("pairing efficiency needs x >= 1 and y >= 1");
    return info(pair(p)) - info(p.x) - info(p.y);
}

std::vector<std::uint64_t> lattice_axis(std::uint64_t max, std::uint64_t step)
{
    if (step == 0)
        throw rejected_input("step must be at least 1");
    if (max == 0)
        throw rejected_input("surface extent must be at least 1");
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = 1; v <= max; v += step) {
        out.push_back(v);
        if (max - v < step)
            break;
    }
    return out;
}

}  // namespace dit
