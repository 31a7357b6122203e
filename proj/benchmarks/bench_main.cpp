#include <benchmark/benchmark.h>

#include "schwarzric/kimura.hpp"
#include "schwarzric/pipeline.hpp"
#include "schwarzric/riccati.hpp"
#include "schwarzric/schwarzian.hpp"

using namespace schwarzric;

static void BM_DecideConditionRic(benchmark::State& state) {
  const TriangleParams p(BigRat(2), BigRat(3), BigRat(7));
  for (auto _ : state) benchmark::DoNotOptimize(decide_condition_ric(p));
}
BENCHMARK(BM_DecideConditionRic);

static void BM_DecideWithWitness(benchmark::State& state) {
  const TriangleParams p(BigRat(2), BigRat(3), BigRat(5));
  for (auto _ : state) benchmark::DoNotOptimize(decide_condition_ric(p));
}
BENCHMARK(BM_DecideWithWitness);

static void BM_KimuraSweep(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hyperbolic_integer_sweep(bound, 1));
}
BENCHMARK(BM_KimuraSweep)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);

static void BM_BuildTriangularR(benchmark::State& state) {
  const TriangleParams p(BigRat(2), BigRat(3), BigRat(7));
  for (auto _ : state) benchmark::DoNotOptimize(build_triangular_R(p));
}
BENCHMARK(BM_BuildTriangularR);

static void BM_RecognizeTriangular(benchmark::State& state) {
  const RatFunc R = build_triangular_R(TriangleParams(BigRat(2), BigRat(3), BigRat(7)));
  for (auto _ : state) benchmark::DoNotOptimize(recognize_triangular(R));
}
BENCHMARK(BM_RecognizeTriangular);

static void BM_OracleHyperbolic(benchmark::State& state) {
  const RiccatiEq e = associate_riccati(build_triangular_R(TriangleParams(BigRat(2), BigRat(3), BigRat(7))));
  const OracleOptions opts{24, false};
  for (auto _ : state) benchmark::DoNotOptimize(rational_solutions(e, opts));
}
BENCHMARK(BM_OracleHyperbolic);

static void BM_OracleWithSolution(benchmark::State& state) {
  const RiccatiEq e =
      associate_riccati(build_triangular_R(TriangleParams(BigRat(1), ExtRational::infinity(), ExtRational::infinity())));
  for (auto _ : state) benchmark::DoNotOptimize(rational_solutions(e));
}
BENCHMARK(BM_OracleWithSolution);

static void BM_SchwarzianOfMoebius(benchmark::State& state) {
  const RatFunc g = Moebius{BigRat(2), BigRat(1), BigRat(3), BigRat(5)}.as_ratfunc();
  for (auto _ : state) benchmark::DoNotOptimize(schwarzian_of(g));
}
BENCHMARK(BM_SchwarzianOfMoebius);

static void BM_PolyGcd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Poly a(1), b(1);
  for (int i = 1; i <= n; ++i) {
    a *= Poly::linear(BigRat(i));
    b *= Poly::linear(BigRat(i % 3 == 0 ? i : -i));
  }
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->Arg(4)->Arg(16)->Arg(32);

static void BM_RatFuncAdd(benchmark::State& state) {
  const RatFunc a(Poly(1), Poly::linear(BigRat(1, 3)).pow(3));
  const RatFunc b(Poly::linear(BigRat(2)), Poly::linear(BigRat(-5)).pow(2) * Poly::linear(BigRat(1, 3)));
  for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_RatFuncAdd);

BENCHMARK_MAIN();
