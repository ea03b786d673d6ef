#include <benchmark/benchmark.h>

#include <omp.h>

#include "equicolor/sweep.hpp"

using namespace equicolor;

namespace {

void BM_AgreementSerial(benchmark::State& state) {
  const auto cases = agreement_grid(state.range(0), {1, 4});
  for (auto _ : state) benchmark::DoNotOptimize(agreement_sweep_serial(cases, {}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cases.size()));
}

void BM_AgreementParallel(benchmark::State& state) {
  const auto cases = agreement_grid(state.range(0), {1, 4});
  for (auto _ : state) benchmark::DoNotOptimize(agreement_sweep_parallel(cases, {}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cases.size()));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_TableSerial(benchmark::State& state) {
  const Int n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(threshold_table_serial({2, 20}, {2, n}, {1, 6}));
}

void BM_TableParallel(benchmark::State& state) {
  const Int n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(threshold_table_parallel({2, 20}, {2, n}, {1, 6}));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_ConstructionSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(construction_sweep_serial(state.range(0), {1, 3}));
}

void BM_ConstructionParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(construction_sweep_parallel(state.range(0), {1, 3}));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_AgreementSerial)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AgreementParallel)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableSerial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConstructionSerial)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConstructionParallel)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
