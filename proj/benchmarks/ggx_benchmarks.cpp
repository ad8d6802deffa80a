#include <benchmark/benchmark.h>

#include <random>

#include "ggx/groups.hpp"
#include "ggx/holes.hpp"
#include "ggx/perfect.hpp"
#include "ggx/power_graphs.hpp"
#include "ggx/reconstruct.hpp"

namespace {

const char* const kGroups[] = {"S5", "A6", "S6", "C30xC30", "S7"};

void BM_BuildGroup(benchmark::State& state) {
  const char* spec = kGroups[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(ggx::build_group(spec).order());
  state.SetLabel(spec);
}
BENCHMARK(BM_BuildGroup)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_PowerGraph(benchmark::State& state) {
  const char* spec = kGroups[state.range(0)];
  const auto group = ggx::build_group(spec);
  for (auto _ : state) benchmark::DoNotOptimize(ggx::power_graph(group).vertex_count());
  state.SetLabel(spec);
}
BENCHMARK(BM_PowerGraph)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_EnhancedPowerGraph(benchmark::State& state) {
  const char* spec = kGroups[state.range(0)];
  const auto group = ggx::build_group(spec);
  for (auto _ : state) benchmark::DoNotOptimize(ggx::enhanced_power_graph(group).vertex_count());
  state.SetLabel(spec);
}
BENCHMARK(BM_EnhancedPowerGraph)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_ReconstructEnhanced(benchmark::State& state) {
  const char* spec = kGroups[state.range(0)];
  const auto power = ggx::power_graph(ggx::build_group(spec));
  for (auto _ : state) benchmark::DoNotOptimize(ggx::reconstruct_enhanced(power).vertex_count());
  state.SetLabel(spec);
}
BENCHMARK(BM_ReconstructEnhanced)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_PerfectnessVerdict(benchmark::State& state) {
  const char* spec = kGroups[state.range(0)];
  const auto enhanced = ggx::enhanced_power_graph(ggx::build_group(spec));
  for (auto _ : state) benchmark::DoNotOptimize(ggx::perfectness_verdict(enhanced).status);
  state.SetLabel(spec);
}
BENCHMARK(BM_PerfectnessVerdict)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

// Sparse random graphs are where the hole search has to work hardest.
void BM_FindOddHole(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::bernoulli_distribution coin(3.0 / static_cast<double>(n));
  ggx::Graph g(n);
  for (ggx::Vertex u = 0; u < n; ++u) {
    for (ggx::Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  ggx::HoleSearchOptions options;
  options.min_length = 7;
  for (auto _ : state) benchmark::DoNotOptimize(ggx::find_odd_hole(g, options).steps);
}
BENCHMARK(BM_FindOddHole)->RangeMultiplier(2)->Range(32, 256);

void BM_S7HoleSearchWithoutBlocks(benchmark::State& state) {
  const auto enhanced = ggx::enhanced_power_graph(ggx::build_group("S7"));
  const auto reduced = ggx::clique_neighborhood_reduction(ggx::twin_quotient(enhanced).first).graph;
  for (auto _ : state) benchmark::DoNotOptimize(ggx::find_odd_hole(reduced).steps);
}
BENCHMARK(BM_S7HoleSearchWithoutBlocks)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
