#include <benchmark/benchmark.h>

#include <random>

#include "skewzf/enumerate.hpp"
#include "skewzf/families.hpp"
#include "skewzf/forcing.hpp"
#include "skewzf/matching.hpp"
#include "skewzf/skewrank.hpp"

using namespace skewzf;

static void BM_ZMinusHypercube(benchmark::State& state) {
  const Graph q = hypercube_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zminus(q).value);
}
BENCHMARK(BM_ZMinusHypercube)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_MinRankK3xK3(benchmark::State& state) {
  const Graph g = k3_times_k3();
  ExhaustiveOptions options;
  options.normalize_spanning_forest = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(min_skew_rank_exhaustive(g, Prime(3), options));
}
BENCHMARK(BM_MinRankK3xK3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_EnumerateConnected(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_connected(n).size());
}
BENCHMARK(BM_EnumerateConnected)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_MaximumMatching(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (uniform_below(rng, 10) == 0) edges.emplace_back(u, v);
    }
  }
  const Graph g = Graph::from_edge_list(n, edges);
  for (auto _ : state) benchmark::DoNotOptimize(maximum_matching(g).size());
}
BENCHMARK(BM_MaximumMatching)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK_MAIN();
