// Serial vs OpenMP subset-enumeration kernels on Booth-Lueker complements.
#include <benchmark/benchmark.h>

#include <vector>

#include "blbetti/booth_lueker.hpp"
#include "blbetti/graph.hpp"
#include "blbetti/subset_kernels.hpp"

namespace {

using namespace blbetti;

// Masks of complement(BL(C_k)), 2k vertices.
std::vector<VertexMask> bl_masks(std::size_t k) {
  const Graph g = bl_complement(graphs::cycle(k));
  std::vector<VertexMask> masks(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex w : g.neighbors(v)) masks[v] |= VertexMask{1} << w;
  return masks;
}

void BM_TallySerial(benchmark::State& state) {
  const auto masks = bl_masks(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tally_components_serial(masks));
  state.counters["vertices"] = static_cast<double>(masks.size());
}

void BM_TallyParallel(benchmark::State& state) {
  const auto masks = bl_masks(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tally_components_parallel(masks));
  state.counters["vertices"] = static_cast<double>(masks.size());
}

BENCHMARK(BM_TallySerial)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TallyParallel)->DenseRange(8, 11)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
