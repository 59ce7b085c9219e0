#include <benchmark/benchmark.h>

#include "rigidity/confgroup.hpp"

using namespace rigidity;

static void BM_PairingInvariance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto grid = make_sphere_grid(n, static_cast<int>(state.range(1)));
  const auto h = random_polynomial_field(n, 2, 1);
  const auto k = random_polynomial_field(n, 2, 2);
  const auto A = MoebiusElement::random(n, 1.0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_pairing_invariance(h, k, A, grid));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.nodes.size()));
}
BENCHMARK(BM_PairingInvariance)->Args({2, 40})->Args({3, 20})->Unit(benchmark::kMillisecond);

static void BM_AhlforsCovariance(benchmark::State& state) {
  std::vector<Eigen::VectorXd> pts;
  for (int i = 0; i < 50; ++i) pts.push_back(Eigen::Vector3d(0.02 * i - 0.5, 0.3, -0.01 * i));
  const ChartVectorField X{[](const Eigen::VectorXd& x) {
                             return Eigen::VectorXd(Eigen::Vector3d(x(0) * x(0), std::sin(x(0)), x(1)));
                           },
                           {}};
  const auto phi = ChartMap::from_moebius(MoebiusElement::random(3, 1.0, 4));
  for (auto _ : state) benchmark::DoNotOptimize(check_ahlfors_covariance(X, phi, pts));
}
BENCHMARK(BM_AhlforsCovariance)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
