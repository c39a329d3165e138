// Soft performance checks: the Eulerian machinery is linear-time, so 10x the
// edges should cost no more than ~15x the wall time.
#include <benchmark/benchmark.h>

#include <random>

#include "edgematch/euler.hpp"
#include "edgematch/tri_solver.hpp"

using namespace edgematch;

namespace {

// random Eulerian multigraph built from overlapping closed walks
euler::MultiGraph random_even_graph(int vertices, int edges, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_int_distribution<int> d(0, vertices - 1);
  euler::MultiGraph g;
  g.num_vertices = vertices;
  int at = 0;
  const int start = at;
  while (static_cast<int>(g.edges.size()) + 1 < edges) {
    int next = d(eng);
    while (next == at) next = d(eng);
    g.add_edge(at, next);
    at = next;
  }
  if (at != start) g.add_edge(at, start);
  return g;
}

std::vector<RightTriTile> random_leg_tiles(int count, int colors, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_int_distribution<int> c(0, colors - 1);
  std::vector<RightTriTile> tiles;
  for (int i = 0; i < count; ++i)
    tiles.push_back({i, Label::uns("c" + std::to_string(c(eng))),
                     Label::uns("c" + std::to_string(c(eng))), Label::uns("H")});
  return tiles;
}

} // namespace

static void BM_EulerianPath(benchmark::State& state) {
  const int edges = static_cast<int>(state.range(0));
  auto g = random_even_graph(std::max(4, edges / 8), edges, 7);
  for (auto _ : state) {
    auto t = euler::eulerian_path(g);
    benchmark::DoNotOptimize(t);
  }
  state.SetComplexityN(edges);
}
BENCHMARK(BM_EulerianPath)->RangeMultiplier(4)->Range(64, 65536)->Complexity(benchmark::oN);

static void BM_FtEulerian(benchmark::State& state) {
  const int edges = static_cast<int>(state.range(0));
  auto g = random_even_graph(std::max(4, edges / 8), edges, 11);
  auto p = euler::PartitionSystem::empty(g.num_vertices);
  for (auto _ : state) {
    auto t = euler::ft_eulerian(g, p, false);
    benchmark::DoNotOptimize(t);
  }
  state.SetComplexityN(edges);
}
BENCHMARK(BM_FtEulerian)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oN);

static void BM_SolveLegContact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst;
  inst.rule = CompatRule::UnsignedEq;
  inst.board = BoardSpec::leg_strip(n, true);
  inst.rtriangles = random_leg_tiles(n, 4, 13);
  for (auto _ : state) {
    auto sol = tri_solver::solve_leg_contact(inst);
    benchmark::DoNotOptimize(sol);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SolveLegContact)->RangeMultiplier(4)->Range(64, 4096);

BENCHMARK_MAIN();
