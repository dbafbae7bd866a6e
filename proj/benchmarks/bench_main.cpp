#include <benchmark/benchmark.h>

#include <random>

#include "nestree/cayley.hpp"
#include "nestree/corpus.hpp"
#include "nestree/pipeline.hpp"
#include "nestree/planarity.hpp"
#include "nestree/symmetry.hpp"
#include "nestree/tutte.hpp"

using namespace nestree;

static void BM_PlanarEmbed(benchmark::State& st) {
  std::mt19937_64 rng(1);
  const Graph g = random_planar(static_cast<int>(st.range(0)), 3 * static_cast<int>(st.range(0)), rng);
  for (auto _ : st) benchmark::DoNotOptimize(planar_embed(g));
}
BENCHMARK(BM_PlanarEmbed)->Arg(50)->Arg(200)->Arg(1000);

static void BM_CayleyBall(benchmark::State& st) {
  const Presentation p = Presentation::parse(fig1_presentation());
  for (auto _ : st) benchmark::DoNotOptimize(cayley_ball(p, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_CayleyBall)->Arg(6)->Arg(10)->Arg(14);

static void BM_TightEnumeration(benchmark::State& st) {
  const Graph g = framed_grid(static_cast<int>(st.range(0)), static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_tight(g, 3));
}
BENCHMARK(BM_TightEnumeration)->Arg(3)->Arg(4);

static void BM_AutomorphismGroup(benchmark::State& st) {
  const Graph g = strip(static_cast<int>(st.range(0))).graph;
  for (auto _ : st) benchmark::DoNotOptimize(automorphism_group(g));
}
BENCHMARK(BM_AutomorphismGroup)->Arg(3)->Arg(5);

static void BM_StripPipeline(benchmark::State& st) {
  const CorpusInstance s = strip(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(planar_structure_pipeline(s.graph, s.actions.at("shift"), s.cycles.at("red")));
}
BENCHMARK(BM_StripPipeline)->Arg(5)->Arg(8);

static void BM_TutteDecomposition(benchmark::State& st) {
  std::mt19937_64 rng(2);
  const int n = static_cast<int>(st.range(0));
  const Graph g = random_connected(n, n + n / 2, rng);
  for (auto _ : st) benchmark::DoNotOptimize(tutte_decomposition(g));
}
BENCHMARK(BM_TutteDecomposition)->Arg(15)->Arg(25)->Arg(40);

static void BM_GridOfGrids(benchmark::State& st) {
  const CorpusInstance gg = grid_of_grids(3, 4, 4);
  for (auto _ : st) benchmark::DoNotOptimize(general_pipeline(gg.graph, gg.actions.at("trivial")));
}
BENCHMARK(BM_GridOfGrids);
BENCHMARK_MAIN();
