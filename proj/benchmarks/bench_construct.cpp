#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "kissgeo/completion.hpp"
#include "kissgeo/embed.hpp"

namespace kissgeo {
namespace {

constexpr int kDim = 3;

void BM_ConstructEmbedding(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  const SquaredDistanceMatrix d = distance_matrix(bench::random_spheres(rng, k, kDim));
  if (!construct_embedding(d, kDim).ok()) {
    state.SkipWithError("instance did not embed");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(construct_embedding(d, kDim));
}
BENCHMARK(BM_ConstructEmbedding)->RangeMultiplier(4)->Range(4, 256);

void BM_SchurConstruction(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::mt19937_64 rng(4);
  const SquaredDistanceMatrix d = distance_matrix(bench::random_spheres(rng, k, kDim));
  if (!schur_construction(d, kDim, 0, 1).ok()) {
    state.SkipWithError("instance did not embed");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(schur_construction(d, kDim, 0, 1));
}
BENCHMARK(BM_SchurConstruction)->RangeMultiplier(4)->Range(4, 256);

// Band graph: each vertex joined to the kDim vertices before it, so the
// maximal cliques are the windows of kDim + 1 consecutive vertices.
void BM_CompleteChordal(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::mt19937_64 rng(5);
  const std::vector<KissingSphere> truth = bench::random_spheres(rng, k, kDim);
  LengthGraph g(k);
  for (int v = 1; v < k; ++v) {
    for (int u = std::max(0, v - kDim); u < v; ++u) g.add_edge(u, v, dist_k(truth[u], truth[v]));
  }
  if (complete_chordal(g, kDim).verdict != CompletionVerdict::Completed) {
    state.SkipWithError("instance did not complete");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(complete_chordal(g, kDim));
  state.SetComplexityN(k);
}
BENCHMARK(BM_CompleteChordal)->RangeMultiplier(2)->Range(8, 40)->Complexity();

}  // namespace
}  // namespace kissgeo
