#include "dit/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dit/errors.hpp"
#include "dit/pairing.hpp"

namespace dit::kernels {

namespace {

std::uint64_t gray(std::uint64_t p) { return p ^ (p >> 1); }

std::uint64_t checked_total(const std::vector<std::uint64_t>& entries)
{
    std::uint64_t total = 0;
    for (auto e : entries) {
        if (e > std::numeric_limits<std::uint64_t>::max() - total)
            throw rejected_input("codebook sum overflows 64 bits");
        total += e;
    }
    return total;
}

std::uint64_t masked_sum(const std::vector<std::uint64_t>& entries, std::uint64_t mask)
{
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if ((mask >> i) & 1U)
            s += entries[i];
    return s;
}

std::uint64_t masked_xor(const std::vector<std::uint64_t>& rows, std::uint64_t mask)
{
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if ((mask >> i) & 1U)
            s ^= rows[i];
    return s;
}

// Walks Gray positions [begin, end), adding every subset sum to hist.
void histogram_range(const std::vector<std::uint64_t>& entries, std::uint64_t begin,
                     std::uint64_t end, std::vector<std::uint64_t>& hist)
{
    if (begin >= end)
        return;
    std::uint64_t mask = gray(begin);
    std::uint64_t s = masked_sum(entries, mask);
    ++hist[s];
    for (std::uint64_t p = begin + 1; p < end; ++p) {
        const int bit = std::countr_zero(p);
        const std::uint64_t m = std::uint64_t{1} << bit;
        if (mask & m)
            s -= entries[bit];
        else
            s += entries[bit];
        mask ^= m;
        ++hist[s];
    }
}

std::optional<std::uint64_t> xor_range(const std::vector<std::uint64_t>& rows,
                                       std::uint64_t target, std::uint64_t begin,
                                       std::uint64_t end)
{
    if (begin >= end)
        return std::nullopt;
    std::uint64_t mask = gray(begin);
    std::uint64_t acc = masked_xor(rows, mask);
    if (begin > 0 && acc == target)
        return begin;
    for (std::uint64_t p = begin + 1; p < end; ++p) {
        const int bit = std::countr_zero(p);
        mask ^= std::uint64_t{1} << bit;
        acc ^= rows[bit];
        if (acc == target)
            return p;
    }
    return std::nullopt;
}

void require_positive_axes(const std::vector<std::uint64_t>& xs,
                           const std::vector<std::uint64_t>& ys)
{
    for (const auto* axis : {&xs, &ys})
        for (auto v : *axis)
            if (v == 0)
                throw rejected_input("surface coordinates must be at least 1");
}

void require_enumerable(std::size_t n)
{
    if (n > 40)
        throw budget_exceeded("subset enumeration limited to 40 items");
}

}  // namespace

std::vector<std::uint64_t> sum_histogram_serial(const std::vector<std::uint64_t>& entries)
{
    require_enumerable(entries.size());
    std::vector<std::uint64_t> hist(checked_total(entries) + 1, 0);
    histogram_range(entries, 0, std::uint64_t{1} << entries.size(), hist);
    return hist;
}

std::vector<std::uint64_t> sum_histogram_parallel(const std::vector<std::uint64_t>& entries)
{
    require_enumerable(entries.size());
    const std::uint64_t len = checked_total(entries) + 1;
    const std::uint64_t n = std::uint64_t{1} << entries.size();
    std::vector<std::uint64_t> hist(len, 0);
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(len, 0);
        const std::uint64_t nt = static_cast<std::uint64_t>(omp_get_num_threads());
        const std::uint64_t t = static_cast<std::uint64_t>(omp_get_thread_num());
        histogram_range(entries, n / nt * t, t + 1 == nt ? n : n / nt * (t + 1), local);
#pragma omp critical
        for (std::uint64_t i = 0; i < len; ++i)
            hist[i] += local[i];
    }
#else
    histogram_range(entries, 0, n, hist);
#endif
    return hist;
}

std::optional<std::uint64_t> xor_search_serial(const std::vector<std::uint64_t>& rows,
                                               std::uint64_t target)
{
    require_enumerable(rows.size());
    auto p = xor_range(rows, target, 0, std::uint64_t{1} << rows.size());
    if (p)
        return gray(*p);
    return std::nullopt;
}

std::optional<std::uint64_t> xor_search_parallel(const std::vector<std::uint64_t>& rows,
                                                 std::uint64_t target)
{
    require_enumerable(rows.size());
    const std::uint64_t n = std::uint64_t{1} << rows.size();
    const std::uint64_t chunk = std::max<std::uint64_t>(n / 256, 1024);
    const std::int64_t nchunks = static_cast<std::int64_t>((n + chunk - 1) / chunk);
    // Smallest hit position so far; chunks starting past it are skipped, so
    // the answer does not depend on scheduling.
    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < nchunks; ++c) {
        const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
        if (begin > best.load(std::memory_order_relaxed))
            continue;
        auto hit = xor_range(rows, target, begin, std::min(n, begin + chunk));
        if (hit) {
            std::uint64_t cur = best.load();
            while (*hit < cur && !best.compare_exchange_weak(cur, *hit)) {
            }
        }
    }
    const std::uint64_t p = best.load();
    if (p == std::numeric_limits<std::uint64_t>::max())
        return std::nullopt;
    return gray(p);
}

InfoValue pairing_cell(std::uint64_t x, std::uint64_t y)
{
    constexpr std::uint64_t fast_limit = std::uint64_t{1} << 62;
    if (x == 0 || y == 0)
        throw rejected_input("pairing efficiency needs x >= 1 and y >= 1");
    if (x >= fast_limit || y >= fast_limit)
        return pairing_efficiency(Point(x, y));
    __extension__ typedef unsigned __int128 u128;
    const u128 s = static_cast<u128>(x) + y;
    const u128 z = s * (s + 1) / 2 + y;
    return static_cast<double>(std::log2(static_cast<long double>(z)) -
                               std::log2(static_cast<long double>(x)) -
                               std::log2(static_cast<long double>(y)));
}

std::vector<InfoValue> pairing_surface_serial(const std::vector<std::uint64_t>& xs,
                                              const std::vector<std::uint64_t>& ys)
{
    require_positive_axes(xs, ys);
    std::vector<InfoValue> out(xs.size() * ys.size());
    for (std::size_t j = 0; j < ys.size(); ++j)
        for (std::size_t i = 0; i < xs.size(); ++i)
            out[j * xs.size() + i] = pairing_cell(xs[i], ys[j]);
    return out;
}

std::vector<InfoValue> pairing_surface_parallel(const std::vector<std::uint64_t>& xs,
                                                const std::vector<std::uint64_t>& ys)
{
    require_positive_axes(xs, ys);
    std::vector<InfoValue> out(xs.size() * ys.size());
    const std::int64_t rows = static_cast<std::int64_t>(ys.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < rows; ++j)
        for (std::size_t i = 0; i < xs.size(); ++i)
            out[static_cast<std::size_t>(j) * xs.size() + i] = pairing_cell(xs[i], ys[j]);
    return out;
}

std::vector<InfoValue> dilation_surface_serial(const DilationSpec& spec,
                                               const std::vector<std::uint64_t>& xs,
                                               const std::vector<std::uint64_t>& ys)
{
    require_positive_axes(xs, ys);
    std::vector<InfoValue> out(xs.size() * ys.size());
    for (std::size_t j = 0; j < ys.size(); ++j)
        for (std::size_t i = 0; i < xs.size(); ++i)
            out[j * xs.size() + i] = dilation_efficiency(spec, Point(xs[i], ys[j]));
    return out;
}

std::vector<InfoValue> dilation_surface_parallel(const DilationSpec& spec,
                                                 const std::vector<std::uint64_t>& xs,
                                                 const std::vector<std::uint64_t>& ys)
{
    require_positive_axes(xs, ys);
    std::vector<InfoValue> out(xs.size() * ys.size());
    const std::int64_t rows = static_cast<std::int64_t>(ys.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < rows; ++j)
        for (std::size_t i = 0; i < xs.size(); ++i)
            out[static_cast<std::size_t>(j) * xs.size() + i] =
                dilation_efficiency(spec, Point(xs[i], ys[j]));
    return out;
}

}  // namespace dit::kernels

namespace dit {

namespace {

SurfaceSample assemble(const std::vector<std::uint64_t>& xs, const std::vector<std::uint64_t>& ys,
                       const std::vector<InfoValue>& deltas, std::uint64_t step)
{
    SurfaceSample s;
    s.step = step;
    s.grid.reserve(deltas.size());
    for (std::size_t j = 0; j < ys.size(); ++j)
        for (std::size_t i = 0; i < xs.size(); ++i)
            s.grid.push_back({xs[i], ys[j], deltas[j * xs.size() + i], std::nullopt});
    return s;
}

}  // namespace

SurfaceSample efficiency_surface(std::uint64_t x_max, std::uint64_t y_max, std::uint64_t step)
{
    auto xs = lattice_axis(x_max, step);
    auto ys = lattice_axis(y_max, step);
    return assemble(xs, ys, kernels::pairing_surface_parallel(xs, ys), step);
}

SurfaceSample dilation_surface(const DilationSpec& spec, std::uint64_t x_max, std::uint64_t y_max,
                               std::uint64_t step)
{
    auto xs = lattice_axis(x_max, step);
    auto ys = lattice_axis(y_max, step);
    SurfaceSample s = assemble(xs, ys, kernels::dilation_surface_parallel(spec, xs, ys), step);
    if (spec.rate == DilationSpec::Rate::constant) {
        const std::uint64_t c = to_u64(spec.c);
        for (auto& cell : s.grid)
            cell.residue = cell.y % c;
    }
    return s;
}

}  // namespace dit
