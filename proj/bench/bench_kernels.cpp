#include <benchmark/benchmark.h>

#include "mosaic/bounds.hpp"
#include "mosaic/bracket.hpp"
#include "mosaic/census.hpp"

namespace {

mosaic::CensusQuery budget_query() {
  mosaic::CensusQuery q;
  q.rows = q.cols = 4;
  q.max_non_blank = 11;
  q.require_single_component = true;
  return q;
}

void BM_CensusParallel(benchmark::State& state) {
  const auto q = budget_query();
  for (auto _ : state) benchmark::DoNotOptimize(mosaic::census(q).records);
}

void BM_CensusSerial(benchmark::State& state) {
  const auto q = budget_query();
  for (auto _ : state) benchmark::DoNotOptimize(mosaic::census_serial(q).records);
}

const mosaic::PDCode& pretzel_pd() {
  static const mosaic::PDCode pd = mosaic::pd_code(mosaic::trace(mosaic::pretzel({-2, 3, 7})));
  return pd;
}

void BM_BracketParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mosaic::bracket(pretzel_pd()));
}

void BM_BracketSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mosaic::bracket_serial(pretzel_pd()));
}

void BM_BracketSkein(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mosaic::bracket_skein(pretzel_pd()));
}

void BM_WeaveSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mosaic::saturated_weave_traditional(n).crossings);
}

}  // namespace

BENCHMARK(BM_CensusParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BracketParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BracketSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BracketSkein)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeaveSearch)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
