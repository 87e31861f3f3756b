#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "kissgeo/embed.hpp"
#include "kissgeo/numkernel.hpp"

namespace kissgeo {
namespace {

void BM_Inertia(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const SymMatrix m = distance_matrix(bench::random_spheres(rng, k, 4)).sym();
  for (auto _ : state) benchmark::DoNotOptimize(inertia(m));
}
BENCHMARK(BM_Inertia)->RangeMultiplier(2)->Range(4, 256);

void BM_CheckKissing(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto method = static_cast<Method>(state.range(1));
  std::mt19937_64 rng(2);
  const SquaredDistanceMatrix d = distance_matrix(bench::random_spheres(rng, k, 3));
  for (auto _ : state) benchmark::DoNotOptimize(check_kissing(d, 3, method));
}
BENCHMARK(BM_CheckKissing)
    ->ArgsProduct({{3, 5, 7, 9, 11}, {static_cast<int>(Method::Minors)}})
    ->ArgsProduct({{3, 5, 7, 9, 11, 64}, {static_cast<int>(Method::Inertia)}});

}  // namespace
}  // namespace kissgeo
