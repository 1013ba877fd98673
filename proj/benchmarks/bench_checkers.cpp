#include <benchmark/benchmark.h>

#include "gdyn/checkers.hpp"
#include "gdyn/corpus.hpp"
#include "gdyn/oracle.hpp"

using namespace gdyn;

namespace {

GSystem sample(std::size_t points, std::uint64_t seed) {
  GeneratorConfig c;
  c.seed = seed;
  c.min_points = points;
  c.max_points = points;
  c.groups = {"Z2"};
  c.mode = TopologyMode::preorder;
  return generate(c);
}

void BM_GTransitive(benchmark::State& state) {
  GSystem s = sample(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_g_transitive(s).verdict);
}
BENCHMARK(BM_GTransitive)->Arg(4)->Arg(6)->Arg(8);

void BM_TotallyGTransitive(benchmark::State& state) {
  GSystem s = sample(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_totally_g_transitive(s).verdict);
}
BENCHMARK(BM_TotallyGTransitive)->Arg(4)->Arg(6)->Arg(8);

void BM_WeakMixingDirect(benchmark::State& state) {
  GSystem s = sample(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(weakly_g_mixing_direct(s).verdict);
}
BENCHMARK(BM_WeakMixingDirect)->Arg(4)->Arg(6)->Arg(8);

void BM_WeakMixingProduct(benchmark::State& state) {
  GSystem s = sample(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(weakly_g_mixing_product(s).verdict);
}
BENCHMARK(BM_WeakMixingProduct)->Arg(4)->Arg(6)->Arg(8);

void BM_StrongMixing(benchmark::State& state) {
  GSystem s = sample(state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(is_strongly_g_mixing(s).verdict);
}
BENCHMARK(BM_StrongMixing)->Arg(4)->Arg(6)->Arg(8);

void BM_MinimalSets(benchmark::State& state) {
  GSystem s = sample(state.range(0), 5);
  for (auto _ : state) benchmark::DoNotOptimize(g_minimal_sets(s));
}
BENCHMARK(BM_MinimalSets)->Arg(4)->Arg(6)->Arg(8);

void BM_OracleWeakMixing(benchmark::State& state) {
  GSystem s = sample(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::weakly_g_mixing(s));
}
BENCHMARK(BM_OracleWeakMixing)->Arg(3)->Arg(4)->Arg(5);

void BM_Generate(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample(state.range(0), seed++).size());
}
BENCHMARK(BM_Generate)->Arg(4)->Arg(6)->Arg(8);

}  // namespace
BENCHMARK_MAIN();
