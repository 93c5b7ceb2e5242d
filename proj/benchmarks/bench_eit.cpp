#include <benchmark/benchmark.h>

#include "eit/config.hpp"
#include "eit/levels.hpp"
#include "eit/propagation.hpp"
#include "eit/susceptibility.hpp"

namespace {

void BM_Chi(benchmark::State& state) {
  const eit::ScenarioConfig c;
  const auto s = c.system();
  const auto d = c.drive();
  double w = -1e11;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eit::chi(w, s, d));
    w += 1e6;
  }
}
BENCHMARK(BM_Chi);

void BM_Spectrum(benchmark::State& state) {
  const eit::ScenarioConfig c;
  const auto grid = c.omega.values();
  for (auto _ : state) {
    benchmark::DoNotOptimize(eit::compute_spectrum(c.system(), c.drive(), grid));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}
BENCHMARK(BM_Spectrum);

void BM_ControlSweep(benchmark::State& state) {
  const eit::ScenarioConfig c;
  const auto grid = c.sweep_values();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        eit::sweep_control(c.system(), c.drive(), grid, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_ControlSweep)->Arg(1)->Arg(4);

void BM_WindowMetrics(benchmark::State& state) {
  const eit::ScenarioConfig c;
  for (auto _ : state) benchmark::DoNotOptimize(eit::window_metrics(c.system(), c.drive()));
}
BENCHMARK(BM_WindowMetrics);

void BM_EtaLm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(eit::levels::eta_lm(3, 1, 0.8));
}
BENCHMARK(BM_EtaLm);

void BM_Propagate(benchmark::State& state) {
  const eit::ScenarioConfig c;
  const auto s = c.system();
  const auto d = c.drive();
  const double duration = eit::default_pulse_duration(s, d, c.slab_length);
  const auto grid = eit::default_propagation_grid(s, d, c.slab_length, duration,
                                                  static_cast<int>(state.range(0)), 2048);
  const auto input = eit::gaussian_pulse(c.rabi_probe, 0.0, duration);
  for (auto _ : state) benchmark::DoNotOptimize(eit::propagate_pulse(input, grid, d, s));
}
BENCHMARK(BM_Propagate)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
