#include <benchmark/benchmark.h>

#include "chaoskit/stein/moments.hpp"
#include "chaoskit/stein/named_targets.hpp"
#include "chaoskit/stein/stein_solution.hpp"

using namespace chaoskit::stein;

static void BM_numeric_coeff(benchmark::State& state) {
  const auto t = student_target(5.0);
  const auto a = coeff_from_density([&](double x) { return t.density(x); }, {}, t.support());
  double x = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(a(x));
    x = x > 3.0 ? -3.0 : x + 0.37;
  }
}
BENCHMARK(BM_numeric_coeff);

static void BM_identity_residual(benchmark::State& state) {
  const auto t = gamma_target(2.0, 1.0);
  const auto h = test_function::monomial(3);
  for (auto _ : state) benchmark::DoNotOptimize(stein_identity_residual(t, h));
}
BENCHMARK(BM_identity_residual);

static void BM_stein_solution_residual(benchmark::State& state) {
  const auto t = beta_target(2.0, 3.0);
  const stein_solution g(t, [](double x) { return x * x; });
  const auto grid = interior_grid(t, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(g.residual(grid[i++ % grid.size()]));
}
BENCHMARK(BM_stein_solution_residual);

static void BM_moment_sequence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(moment_sequence({-0.5, 0.3, 1.2}, 40));
}
BENCHMARK(BM_moment_sequence);

BENCHMARK_MAIN();
