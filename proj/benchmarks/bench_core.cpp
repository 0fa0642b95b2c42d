#include <benchmark/benchmark.h>

#include "sqtsim/analysis.hpp"

using namespace sqtsim;

namespace {

EvolutionScenario reference_scenario() {
  return EvolutionScenario(3, BathParams(1, Real(0.1), Real(0.1)));
}

void BM_point_metrics(benchmark::State& state) {
  const EvolutionScenario scenario = reference_scenario();
  Real t = 0;
  for (auto _ : state) {
    const SqtMetrics m = sqt_metrics(scenario, t);
    benchmark::DoNotOptimize(m);
    t += Real(1) / 1024;
    if (t > 20) t = 0;
  }
}
BENCHMARK(BM_point_metrics);

void BM_symplectic_spectrum(benchmark::State& state) {
  const auto sigma = reference_scenario().covariance_at(1);
  for (auto _ : state) {
    auto nu = symplectic_eigenvalues(sigma);
    benchmark::DoNotOptimize(nu);
  }
}
BENCHMARK(BM_symplectic_spectrum);

void BM_window(benchmark::State& state) {
  const EvolutionScenario scenario = reference_scenario();
  for (auto _ : state) {
    const TimeWindow w = sqt_window(scenario, 20, 512, Real(1e-6));
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_window)->Unit(benchmark::kMillisecond);

void BM_sweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const AxisSpec time_axis{SweepParameter::Time, 0, 20, n};
  const AxisSpec squeeze_axis{SweepParameter::InitialSqueezing, 0, 4, n};
  for (auto _ : state) {
    const RegionMap map = sweep_2d(SweepPoint{}, time_axis, squeeze_axis, 1);
    benchmark::DoNotOptimize(map);
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_sweep)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
