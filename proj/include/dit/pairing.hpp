#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dit/nat.hpp"
#include "dit/numeric.hpp"

namespace dit {

struct Point {
    Nat x;
    Nat y;

    Point() = default;
    Point(Nat px, Nat py);
    Point(unsigned long px, unsigned long py) : x(px), y(py) {}

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

Nat pair(const Point& p);
inline Nat pair(const Nat& x, const Nat& y) { return pair(Point(x, y)); }

/// Triangular root of z: w = largest with w(w+1)/2 <= z, and t = w(w+1)/2.
struct TriangularRoot {
    Nat w;
    Nat t;
};
TriangularRoot triangular_root(const Nat& z);

Point unpair(const Nat& z);

Nat taxicab(const Point& a, const Point& b);

/// Binary entropy of the step mix of an ascending lattice path to p.
InfoValue path_entropy(const Point& p);

/// log2 pair(x,y) - log2 x - log2 y. Both coordinates must be >= 1.
InfoValue pairing_efficiency(const Point& p);

struct SurfaceCell {
    std::uint64_t x;
    std::uint64_t y;
    InfoValue delta;
    std::optional<std::uint64_t> residue;  // only set for constant-rate dilations
};

struct SurfaceSample {
    std::vector<SurfaceCell> grid;  // y-major, then x
    std::uint64_t step = 1;
};

/// Samples pairing_efficiency on {1, 1+step, ...} in each axis.
SurfaceSample efficiency_surface(std::uint64_t x_max, std::uint64_t y_max, std::uint64_t step);

/// Lattice coordinates 1, 1+step, ... <= max.
std::vector<std::uint64_t> lattice_axis(std::uint64_t max, std::uint64_t step);

}  // namespace dit
