#include <benchmark/benchmark.h>

#include <random>

#include "chaoskit/diagnostics/chaos_moments.hpp"
#include "chaoskit/diagnostics/kernel_family.hpp"
#include "chaoskit/diagnostics/stein_residual.hpp"
#include "chaoskit/gaussian/chaos_vector.hpp"
#include "chaoskit/gaussian/contraction.hpp"
#include "chaoskit/gaussian/wick.hpp"

using namespace chaoskit;

namespace {

gaussian::symmetric_kernel dense_kernel(std::size_t dim, unsigned order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  gaussian::symmetric_kernel f(dim, order);
  gaussian::multi_index idx(order, 0);
  // Walk every sorted multi-index.
  while (true) {
    f.add(idx, val(rng));
    int p = static_cast<int>(order) - 1;
    while (p >= 0 && idx[p] == dim - 1) --p;
    if (p < 0) break;
    ++idx[p];
    for (unsigned q = p + 1; q < order; ++q) idx[q] = idx[p];
  }
  return f;
}

}  // namespace

static void BM_contraction(benchmark::State& state) {
  const auto f = dense_kernel(state.range(0), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(gaussian::contract_symmetrized(f, f, 1));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_contraction)->RangeMultiplier(2)->Range(2, 16)->Complexity();

static void BM_moment4_clt(benchmark::State& state) {
  const auto f = diagnostics::kernel_family::gaussian_clt().member(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(diagnostics::moment4(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_moment4_clt)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

static void BM_moment4_dense(benchmark::State& state) {
  const auto f = dense_kernel(state.range(0), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(diagnostics::moment4(f));
}
BENCHMARK(BM_moment4_dense)->RangeMultiplier(2)->Range(4, 32);

static void BM_wick_moment4(benchmark::State& state) {
  const auto F = gaussian::chaos_vector::single(dense_kernel(3, static_cast<unsigned>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(gaussian::wick_moment(F, 4));
}
BENCHMARK(BM_wick_moment4)->DenseRange(1, 3);

static void BM_chaos_product(benchmark::State& state) {
  const auto F = gaussian::chaos_vector::single(dense_kernel(state.range(0), 2, 4));
  for (auto _ : state) benchmark::DoNotOptimize(gaussian::chaos_product(F, F));
}
BENCHMARK(BM_chaos_product)->RangeMultiplier(2)->Range(2, 16);

static void BM_residual_levels(benchmark::State& state) {
  const auto f = dense_kernel(state.range(0), 2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(diagnostics::stein_residual_chaos(f, {0.1, 0.5, 2.0}));
}
BENCHMARK(BM_residual_levels)->RangeMultiplier(2)->Range(2, 16);

static void BM_residual_subtraction(benchmark::State& state) {
  const auto f = dense_kernel(state.range(0), 2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(diagnostics::stein_residual_subtraction(f, {0.1, 0.5, 2.0}));
}
BENCHMARK(BM_residual_subtraction)->RangeMultiplier(2)->Range(2, 16);

static void BM_residual_mc(benchmark::State& state) {
  const auto f = diagnostics::kernel_family::gaussian_clt().member(16);
  for (auto _ : state) benchmark::DoNotOptimize(diagnostics::stein_residual_mc(f, {0, 0, 2}, state.range(0), 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_residual_mc)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
