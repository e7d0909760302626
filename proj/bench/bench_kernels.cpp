// Serial reference vs OpenMP kernel, plus GF(2) elimination against
// exhaustive search for SB-XOR. Run with OMP_NUM_THREADS set to taste.

#include <benchmark/benchmark.h>

#include "dit/kernels.hpp"
#include "dit/pairing.hpp"
#include "dit/sbxor.hpp"
#include "dit/subset_problems.hpp"

using namespace dit;

namespace {

std::vector<std::uint64_t> codebook_words(std::size_t k)
{
    std::vector<std::uint64_t> v;
    for (const auto& e : gen_scale_free(k, 7).entries)
        v.push_back(e.get_ui());
    return v;
}

// A target outside the row span forces a full scan.
std::pair<std::vector<std::uint64_t>, std::uint64_t> unsolvable_rows(std::size_t n)
{
    std::vector<std::uint64_t> rows;
    for (const auto& r : gen_random(n, 40, 3).rows)
        rows.push_back(r.word(0) & ((1ULL << 39) - 1));
    return {rows, 1ULL << 39};
}

void BM_SumHistogramSerial(benchmark::State& st)
{
    auto v = codebook_words(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::sum_histogram_serial(v));
}

void BM_SumHistogramParallel(benchmark::State& st)
{
    auto v = codebook_words(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::sum_histogram_parallel(v));
}

void BM_XorSearchSerial(benchmark::State& st)
{
    auto [rows, t] = unsolvable_rows(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::xor_search_serial(rows, t));
}

void BM_XorSearchParallel(benchmark::State& st)
{
    auto [rows, t] = unsolvable_rows(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::xor_search_parallel(rows, t));
}

void BM_PairingSurfaceSerial(benchmark::State& st)
{
    auto xs = lattice_axis(1u << 20, 1024), ys = lattice_axis(1u << 20, 1024);
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::pairing_surface_serial(xs, ys));
}

void BM_PairingSurfaceParallel(benchmark::State& st)
{
    auto xs = lattice_axis(1u << 20, 1024), ys = lattice_axis(1u << 20, 1024);
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::pairing_surface_parallel(xs, ys));
}

void BM_DilationSurfaceSerial(benchmark::State& st)
{
    auto xs = lattice_axis(4096, 16), ys = lattice_axis(4096, 16);
    auto spec = DilationSpec::linear(2);
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::dilation_surface_serial(spec, xs, ys));
}

void BM_DilationSurfaceParallel(benchmark::State& st)
{
    auto xs = lattice_axis(4096, 16), ys = lattice_axis(4096, 16);
    auto spec = DilationSpec::linear(2);
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::dilation_surface_parallel(spec, xs, ys));
}

// n rows of n bits padded with a zero column; the target sets that column,
// so no selection matches and brute force visits all 2^n - 1 selections.
SbxorInstance unsolvable_instance(std::size_t n)
{
    auto base = gen_random(n, n, 11);
    std::vector<BitVector> rows;
    for (const auto& r : base.rows) {
        BitVector w(n + 1);
        for (std::size_t j = 0; j < n; ++j)
            w.set(j, r.get(j));
        rows.push_back(w);
    }
    BitVector t(n + 1);
    t.set(n);
    return SbxorInstance(rows, t);
}

void BM_SbxorGf2(benchmark::State& st)
{
    auto inst = unsolvable_instance(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(solve_gf2(inst));
}

void BM_SbxorBruteForce(benchmark::State& st)
{
    auto inst = unsolvable_instance(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(solve_bruteforce(inst));
}

}  // namespace

BENCHMARK(BM_SumHistogramSerial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SumHistogramParallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_XorSearchSerial)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_XorSearchParallel)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairingSurfaceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairingSurfaceParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DilationSurfaceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DilationSurfaceParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SbxorGf2)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SbxorBruteForce)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
