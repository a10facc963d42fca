#include <benchmark/benchmark.h>

#include "qseries/etaq.hpp"
#include "qseries/series.hpp"
#include "qseries/series_kernels.hpp"
#include "qseries/verify.hpp"

using namespace qseries;

namespace {

// Dense operands with growing coefficients, the worst case for convolution.
TruncatedSeries dense_operand(std::size_t order, unsigned power)
{
    return pow(euler_series(order), power);
}

void BM_ConvolveSerial(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = dense_operand(n, 8);
    const auto b = dense_operand(n, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::convolve_serial(a.coeffs(), b.coeffs(), n));
    }
    state.SetComplexityN(state.range(0));
}

void BM_ConvolveParallel(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = dense_operand(n, 8);
    const auto b = dense_operand(n, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::convolve_parallel(a.coeffs(), b.coeffs(), n));
    }
    state.SetComplexityN(state.range(0));
}

void BM_ExpandA(benchmark::State &state)
{
    const auto spec = parse_spec("3^8");
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(expand(spec, n));
    }
}

void BM_VerifyClosedForms(benchmark::State &state)
{
    VerifyOptions opts;
    opts.workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_closed_forms(3000, opts));
    }
}

void BM_VerifyDivisibility(benchmark::State &state)
{
    VerifyOptions opts;
    opts.workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_divisibility(100'000, opts));
    }
}

} // namespace

BENCHMARK(BM_ConvolveSerial)->RangeMultiplier(2)->Range(256, 4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvolveParallel)->RangeMultiplier(2)->Range(256, 4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpandA)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
// workers = 0 resolves to every available thread.
BENCHMARK(BM_VerifyClosedForms)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifyDivisibility)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
