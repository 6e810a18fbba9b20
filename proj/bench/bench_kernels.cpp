// Serial reference against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "tvchow/bundle.hpp"
#include "tvchow/downgrade.hpp"
#include "tvchow/sigma_e.hpp"

namespace {

using tvchow::Execution;

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void BM_SigmaEFVector(benchmark::State& state) {
  const tvchow::SparseSigmaE sigma_E(static_cast<std::size_t>(state.range(1)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_E.f_vector(mode(state)));
}
BENCHMARK(BM_SigmaEFVector)->ArgsProduct({{0, 1}, {4, 6}})->ArgNames({"parallel", "N"});

void BM_IsComplete(benchmark::State& state) {
  const tvchow::Fan fan = tvchow::build_sigma_E(2, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(tvchow::is_complete(fan, mode(state)));
}
BENCHMARK(BM_IsComplete)->ArgsProduct({{0, 1}, {1, 2}})->ArgNames({"parallel", "d"});

void BM_BuildYC(benchmark::State& state) {
  const tvchow::MarkedFansyDivisor X = tvchow::toric_downgrade(tvchow::p2_fan());
  for (auto _ : state) benchmark::DoNotOptimize(tvchow::build_YC(X, static_cast<std::size_t>(state.range(1)), mode(state)));
}
BENCHMARK(BM_BuildYC)->ArgsProduct({{0, 1}, {2, 3}})->ArgNames({"parallel", "N"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
