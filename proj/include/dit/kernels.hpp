#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dit/dilation.hpp"
#include "dit/numeric.hpp"

/// Data-parallel kernels. Each has a serial reference and an OpenMP
/// version that must produce identical results.
namespace dit::kernels {

/// hist[s] = number of subsets of entries with sum s, for every s in
/// [0, sum(entries)].
std::vector<std::uint64_t> sum_histogram_serial(const std::vector<std::uint64_t>& entries);
std::vector<std::uint64_t> sum_histogram_parallel(const std::vector<std::uint64_t>& entries);

/// Gray-code position p maps to selection mask p ^ (p >> 1). Returns the
/// mask of the smallest position p >= 1 whose rows fold to target.
std::optional<std::uint64_t> xor_search_serial(const std::vector<std::uint64_t>& rows,
                                               std::uint64_t target);
std::optional<std::uint64_t> xor_search_parallel(const std::vector<std::uint64_t>& rows,
                                                 std::uint64_t target);

/// Delta values on xs-by-ys, y-major.
std::vector<InfoValue> pairing_surface_serial(const std::vector<std::uint64_t>& xs,
                                              const std::vector<std::uint64_t>& ys);
std::vector<InfoValue> pairing_surface_parallel(const std::vector<std::uint64_t>& xs,
                                                const std::vector<std::uint64_t>& ys);

std::vector<InfoValue> dilation_surface_serial(const DilationSpec& spec,
                                               const std::vector<std::uint64_t>& xs,
                                               const std::vector<std::uint64_t>& ys);
std::vector<InfoValue> dilation_surface_parallel(const DilationSpec& spec,
                                                 const std::vector<std::uint64_t>& xs,
                                                 const std::vector<std::uint64_t>& ys);

/// Single-cell evaluators shared by both versions.
InfoValue pairing_cell(std::uint64_t x, std::uint64_t y);

}  // namespace dit::kernels

namespace dit {

/// Dilated efficiency surface; constant rates also get residue = y mod c.
SurfaceSample dilation_surface(const DilationSpec& spec, std::uint64_t x_max,
                               std::uint64_t y_max, std::uint64_t step);

}  // namespace dit
