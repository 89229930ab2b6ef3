// Permanent of the GFP Hessenberg matrix: O(n^2) recursion against the
// factorial permutation sum, serial and OpenMP.

#include <isobaric/parallel.hpp>

#include <benchmark/benchmark.h>

using namespace isobaric;

namespace {

Matrix<Int> sample(std::size_t n) {
    return hessenberg(HessenbergSign::plus, WeightVector::all_ones(), Core({3, -2, 5, 1}), n);
}

void BM_PermanentHessenberg(benchmark::State& state) {
    auto h = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(permanent_hessenberg(h));
}

void BM_PermanentNaiveSerial(benchmark::State& state) {
    auto h = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(permanent_naive(h));
}

void BM_PermanentNaiveParallel(benchmark::State& state) {
    auto h = sample(static_cast<std::size_t>(state.range(0)));
    state.counters["threads"] = omp_get_max_threads();
    for (auto _ : state) benchmark::DoNotOptimize(permanent_naive_parallel(h));
}

}  // namespace

BENCHMARK(BM_PermanentHessenberg)->DenseRange(2, 8, 2)->Arg(64);
BENCHMARK(BM_PermanentNaiveSerial)->DenseRange(2, 8, 2);
BENCHMARK(BM_PermanentNaiveParallel)->DenseRange(2, 8, 2);

BENCHMARK_MAIN();
