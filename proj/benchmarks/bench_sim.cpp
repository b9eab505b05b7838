#include <benchmark/benchmark.h>

#include "chaoskit/sim/empirical.hpp"
#include "chaoskit/sim/simulate.hpp"
#include "chaoskit/stein/named_targets.hpp"

using namespace chaoskit;

static void BM_euler_maruyama(benchmark::State& state) {
  const auto t = state.range(0) == 0 ? stein::normal_target(1.0) : stein::beta_target(0.5, 0.5);
  sim::sim_config cfg;
  cfg.burn_in = 0;
  cfg.samples = 10000;
  cfg.thinning = 10;
  cfg.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sim::simulate(t, cfg));
  state.SetItemsProcessed(state.iterations() * cfg.samples * cfg.thinning);
  state.SetLabel(t.name());
}
BENCHMARK(BM_euler_maruyama)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_ks_distance(benchmark::State& state) {
  const auto t = stein::gamma_target(2.0, 1.0);
  const auto e = sim::sample_exact(t, state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(sim::ks_distance(e, t));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ks_distance)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_wasserstein(benchmark::State& state) {
  const auto t = stein::normal_target(1.0);
  const auto a = sim::sample_exact(t, state.range(0), 1);
  const auto b = sim::sample_exact(t, state.range(0) + 17, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sim::wasserstein1_distance(a, b));
}
BENCHMARK(BM_wasserstein)->Arg(10000)->Arg(100000);

BENCHMARK_MAIN();
