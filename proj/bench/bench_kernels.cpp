// Serial reference vs OpenMP kernels. The second argument of the parallel
// variants is the worker count.

#include "ggp/linalg.hpp"
#include "ggp/pairings.hpp"
#include "ggp/permgroup.hpp"
#include "ggp/randmat.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

void BM_distribution_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ggp::statistic_distribution_serial(n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ggp::pairing_count(n)));
}
BENCHMARK(BM_distribution_serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_distribution_parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ggp::ExecConfig exec{static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(ggp::statistic_distribution(n, exec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ggp::pairing_count(n)));
}
BENCHMARK(BM_distribution_parallel)->ArgsProduct({{6, 7}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

ggp::SymMatrix bench_matrix(std::size_t n) { return ggp::sample_markov(n, ggp::EntryLaw::gaussian, 5); }

void BM_matmul_serial(benchmark::State& state) {
  const auto a = bench_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ggp::multiply_commuting_serial(a, a));
}
BENCHMARK(BM_matmul_serial)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_matmul_parallel(benchmark::State& state) {
  const auto a = bench_matrix(static_cast<std::size_t>(state.range(0)));
  const ggp::ExecConfig exec{static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(ggp::multiply_commuting(a, a, exec));
}
BENCHMARK(BM_matmul_parallel)->ArgsProduct({{200, 400}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

double exp_h(const ggp::Permutation& s) { return std::exp(-0.5 * ggp::big_h(s)); }

void BM_kernel_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ggp::kernel_matrix_serial(5, exp_h));
}
BENCHMARK(BM_kernel_serial)->Unit(benchmark::kMillisecond);

void BM_kernel_parallel(benchmark::State& state) {
  const ggp::ExecConfig exec{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(ggp::kernel_matrix(5, exp_h, exec));
}
BENCHMARK(BM_kernel_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

ggp::McConfig mc_config() {
  ggp::McConfig cfg;
  cfg.n = 150;
  cfg.trials = 8;
  return cfg;
}

void BM_mc_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ggp::run_mc_serial(mc_config()));
}
BENCHMARK(BM_mc_serial)->Unit(benchmark::kMillisecond);

void BM_mc_parallel(benchmark::State& state) {
  const ggp::ExecConfig exec{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(ggp::run_mc(mc_config(), exec));
}
BENCHMARK(BM_mc_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
