#include "arpt/classifier.hpp"
#include "arpt/division.hpp"
#include "arpt/galois.hpp"

#include <benchmark/benchmark.h>

using namespace arpt;

static void BM_DivisionPolynomial(benchmark::State& state) {
  Curve e = curve_from_coeffs(1, 0, 1, 354, 4684);
  for (auto _ : state) {
    DivisionPolyCache cache(e);
    benchmark::DoNotOptimize(cache.torsion_x_poly(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_DivisionPolynomial)->DenseRange(3, 12, 3);

static void BM_ClassifyExample(benchmark::State& state) {
  Curve e = curve_from_coeffs(1, 0, 1, 354, 4684);
  for (auto _ : state) benchmark::DoNotOptimize(classify(e));
}
BENCHMARK(BM_ClassifyExample)->Unit(benchmark::kMillisecond);

static void BM_ClassifyPartner(benchmark::State& state) {
  Curve e = curve_from_coeffs(1, 0, 1, -3321, -157604);
  for (auto _ : state) benchmark::DoNotOptimize(classify(e));
}
BENCHMARK(BM_ClassifyPartner)->Unit(benchmark::kMillisecond);

static void BM_GmCheck(benchmark::State& state) {
  for (auto _ : state) {
    long passing = 0;
    for (long n = 1; n <= state.range(0); ++n) passing += gm_almost_rational(n).almost_rational;
    benchmark::DoNotOptimize(passing);
  }
}
BENCHMARK(BM_GmCheck)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
