#include <benchmark/benchmark.h>

#include "rigidity/greens.hpp"

using namespace rigidity;

static void BM_GreenL2ClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double r = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(green_L2(n, r));
    r = r < 3.0 ? r + 0.01 : 0.3;
  }
}
BENCHMARK(BM_GreenL2ClosedForm)->Arg(3)->Arg(7);

static void BM_GreenL2Quadrature(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(green_L2_quadrature(n, 1.3));
}
BENCHMARK(BM_GreenL2Quadrature)->Arg(3)->Arg(7);

static void BM_RegularPart(benchmark::State& state) {
  const RadialGreen g(static_cast<int>(state.range(0)), GreenKind::L2);
  for (auto _ : state) benchmark::DoNotOptimize(regular_part(g));
}
BENCHMARK(BM_RegularPart)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
