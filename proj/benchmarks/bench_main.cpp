// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "rtnlab/haar.hpp"
#include "rtnlab/loss.hpp"
#include "rtnlab/network.hpp"
#include "rtnlab/partition.hpp"
#include "rtnlab/polyomino.hpp"
#include "rtnlab/series.hpp"

using namespace rtnlab;

static void BM_HaarUnitary(benchmark::State& state) {
  Rng rng = make_rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(haar_unitary(n, rng));
}
BENCHMARK(BM_HaarUnitary)->Arg(8)->Arg(18)->Arg(32);

static void BM_NormSquared(benchmark::State& state) {
  const auto L = static_cast<std::size_t>(state.range(0));
  const TNState st = build_state({L, L + 1, 2, 2}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(norm_squared(st));
}
BENCHMARK(BM_NormSquared)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_GradientGlobal(benchmark::State& state) {
  const auto L = static_cast<std::size_t>(state.range(0));
  const TNState st = build_state({L, L, 2, 2}, 4);
  const LossSpec loss = LossSpec::global(LossKind::global_normalized, plus_state(2));
  for (auto _ : state) benchmark::DoNotOptimize(loss_and_gradients(st, loss));
}
BENCHMARK(BM_GradientGlobal)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_GradientLocal(benchmark::State& state) {
  const TNState st = build_state({4, 5, 2, 2}, 5);
  const LossSpec loss = LossSpec::local(LossKind::local_unnormalized, traceless_observable(2), 0, true);
  for (auto _ : state) benchmark::DoNotOptimize(loss_and_gradients(st, loss));
}
BENCHMARK(BM_GradientLocal)->Unit(benchmark::kMillisecond);

static void BM_PartitionFunction(benchmark::State& state) {
  const auto L = static_cast<std::size_t>(state.range(0));
  const WeightTable f = f_table(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(exact_partition_function(L, L, f, 1));
}
BENCHMARK(BM_PartitionFunction)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_DirectedEnumeration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_directed(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_DirectedEnumeration)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_SeriesCoefficients(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series_coefficients(m, m));
}
BENCHMARK(BM_SeriesCoefficients)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
