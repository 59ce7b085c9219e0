#include <benchmark/benchmark.h>

#include "rigidity/spectrum.hpp"

using namespace rigidity;

static void BM_SpectrumGenerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int j_max = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_generate(n, j_max));
  state.SetItemsProcessed(state.iterations() * 3 * (j_max + 1));
}
BENCHMARK(BM_SpectrumGenerate)->Args({4, 100})->Args({12, 100})->Args({12, 400});

static void BM_ClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int j = 0; j <= 100; ++j) benchmark::DoNotOptimize(t0_eigenvalue(KType(n, j, 2)));
}
BENCHMARK(BM_ClosedForm)->Arg(4)->Arg(12);

BENCHMARK_MAIN();
