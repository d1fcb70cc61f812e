#include <benchmark/benchmark.h>

#include "tetra/sequences.hpp"
#include "tetra/tetrahedron.hpp"
#include "tetra/transforms.hpp"
#include "tetra/triangle.hpp"

using namespace tetra;

static void BM_BuildPascal(benchmark::State& state) {
  const index_t levels = state.range(0);
  const Triangle t = pascal_triangle(levels);
  for (auto _ : state) benchmark::DoNotOptimize(build(t, levels));
  state.SetComplexityN(levels);
}
BENCHMARK(BM_BuildPascal)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_BuildExtended(benchmark::State& state) {
  const index_t levels = state.range(0);
  const Triangle t = pascal_triangle(levels);
  for (auto _ : state) benchmark::DoNotOptimize(build_extended(t, levels));
}
BENCHMARK(BM_BuildExtended)->RangeMultiplier(2)->Range(8, 64);

static void BM_EntryExplicit(benchmark::State& state) {
  const index_t i = state.range(0);
  const Triangle t = pascal_triangle(i);
  for (auto _ : state) benchmark::DoNotOptimize(entry_explicit(t, i, 0, i / 2));
}
BENCHMARK(BM_EntryExplicit)->RangeMultiplier(2)->Range(8, 128);

static void BM_EntryExplicitReindexed(benchmark::State& state) {
  const index_t i = state.range(0);
  const Triangle t = pascal_triangle(i);
  for (auto _ : state) benchmark::DoNotOptimize(entry_explicit_reindexed(t, i, 0, i / 2));
}
BENCHMARK(BM_EntryExplicitReindexed)->RangeMultiplier(2)->Range(8, 128);

static void BM_Transform(benchmark::State& state) {
  const index_t n = state.range(0);
  const Triangle t = pascal_triangle(n);
  for (auto _ : state) benchmark::DoNotOptimize(tetra_transform(t, n));
}
BENCHMARK(BM_Transform)->RangeMultiplier(2)->Range(8, 128);

static void BM_ClosedFormEntry(benchmark::State& state) {
  const index_t i = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_entry(i, i / 4, i / 2));
}
BENCHMARK(BM_ClosedFormEntry)->RangeMultiplier(2)->Range(8, 256);

static void BM_GegenbauerCheck(benchmark::State& state) {
  const index_t i_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(check_gegenbauer_conjecture(i_max));
}
BENCHMARK(BM_GegenbauerCheck)->Arg(10)->Arg(20)->Arg(40);

BENCHMARK_MAIN();
