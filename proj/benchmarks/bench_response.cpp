#include <benchmark/benchmark.h>

#include "echo2d/response.hpp"
#include "echo2d/spectra.hpp"
#include "echo2d/system.hpp"

namespace {

echo2d::ExcitonSystem dimer(bool broadened) {
  echo2d::SiteDimerParams p;
  p.omega_a = 2.29403;  // rad/fs
  p.omega_b = 2.49512;
  p.coupling_meV = 66.0;
  p.mu_a = -1.1;
  p.mu_b = 1.5;
  auto sys = echo2d::build_exciton_dimer(p).first;
  if (broadened) sys = echo2d::set_rates(sys, std::vector<double>(4, 0.01), false);
  return sys;
}

void BM_EnumerateAndFactor(benchmark::State& state) {
  const auto sys = dimer(false);
  for (auto _ : state) {
    auto amps = echo2d::factor_pathways(
        sys, echo2d::enumerate_pathways(sys, echo2d::ExperimentKind::Rephasing));
    benchmark::DoNotOptimize(amps);
  }
}
BENCHMARK(BM_EnumerateAndFactor);

void BM_SignalTimeDomain(benchmark::State& state) {
  const auto sys = dimer(true);
  const auto amps = echo2d::factor_pathways(
      sys, echo2d::enumerate_pathways(sys, echo2d::ExperimentKind::Rephasing));
  double t = 0.0;
  for (auto _ : state) {
    t += 0.1;
    benchmark::DoNotOptimize(echo2d::signal_time_domain(amps, t, 20.0, t));
  }
}
BENCHMARK(BM_SignalTimeDomain);

void BM_DenseOracle(benchmark::State& state) {
  const auto sys = dimer(true);
  double t = 0.0;
  for (auto _ : state) {
    t += 0.1;
    benchmark::DoNotOptimize(
        echo2d::dense_oracle(sys, echo2d::ExperimentKind::Rephasing, t, 20.0, t));
  }
}
BENCHMARK(BM_DenseOracle);

void BM_SpectrumGrid(benchmark::State& state) {
  const auto sys = dimer(true);
  const auto amps = echo2d::factor_pathways(
      sys, echo2d::enumerate_pathways(sys, echo2d::ExperimentKind::Rephasing));
  echo2d::FrequencyGridSpec spec{-2.9, -1.9, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    auto g = echo2d::spectrum_grid(amps, spec, 0.0, echo2d::ExperimentKind::Rephasing);
    benchmark::DoNotOptimize(g);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpectrumGrid)->Arg(64)->Arg(128)->Arg(256)->Complexity(benchmark::oNSquared);

}  // namespace

BENCHMARK_MAIN();
