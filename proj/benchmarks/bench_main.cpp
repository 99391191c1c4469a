#include <benchmark/benchmark.h>

#include "qsphere/qsphere.hpp"

using namespace qsphere;

static void BM_SumOfSquaresPower(benchmark::State& state) {
  const MultiPoly a2 = sum_of_squares(3);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pow(a2, k));
}
BENCHMARK(BM_SumOfSquaresPower)->DenseRange(2, 8, 2);

static void BM_Multiply(benchmark::State& state) {
  const MultiPoly f = parse_polynomial("x^3 - 2*x*y*z + 5/3*z^2 + y - 7", 3);
  const MultiPoly g = pow(f, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(g * f);
}
BENCHMARK(BM_Multiply)->Arg(2)->Arg(4);

static void BM_TwoPointSurface(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(two_point_surface({n, Rational(5, 2)}));
}
BENCHMARK(BM_TwoPointSurface)->DenseRange(2, 8, 3);

static void BM_AbsoluteMultiplicity(benchmark::State& state) {
  const Surface s = two_point_surface({static_cast<int>(state.range(0)), Rational(2)});
  for (auto _ : state) benchmark::DoNotOptimize(absolute_multiplicity(s));
}
BENCHMARK(BM_AbsoluteMultiplicity)->DenseRange(2, 8, 3);

static void BM_Polygonize(benchmark::State& state) {
  const Surface s = two_point_surface({3, Rational(2)});
  const GridSpec grid = suggest_grid(s, static_cast<int>(state.range(0)));
  const PolygonizeOptions options{static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(polygonize(s, grid, options));
}
BENCHMARK(BM_Polygonize)->Args({32, 1})->Args({64, 1})->Args({64, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
