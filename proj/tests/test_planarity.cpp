#include <gtest/gtest.h>

#include <random>

#include "cases.hpp"
#include "nestree/corpus.hpp"
#include "nestree/cyclespace.hpp"
#include "nestree/error.hpp"
#include "nestree/planarity.hpp"

using namespace nestree;

namespace {

Graph k33() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) e.emplace_back(i, j);
  return Graph::with_vertices(6, e);
}

Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::with_vertices(10, e);
}

void expect_euler(const Graph& g, const RotationSystem& r) {
  const auto fs = faces(r);
  // Every dart on exactly one walk.
  std::vector<int> seen(static_cast<size_t>(2 * g.num_edges()), 0);
  for (const auto& f : fs)
    for (int d : f.darts) ++seen[static_cast<size_t>(d)];
  for (int s : seen) ASSERT_EQ(s, 1);
  // Euler per component, counting every walk of a component as a face.
  EXPECT_EQ(g.num_vertices() - g.num_edges() + static_cast<int>(fs.size()), 2 * count_components(g));
}

Graph witness_subgraph(const Graph& g, const std::vector<int>& edges) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int x : edges) e.push_back(g.edge_ids(x));
  return Graph(g.ids(), e);
}

}  // namespace

TEST(Planarity, AgreesWithReferenceOnRandomGraphs) {
  for (const auto& c : cases::graph_cases()) {
    const EmbedResult r = planar_embed(c.graph);
    ASSERT_EQ(r.planar(), c.planar);
    if (r.planar()) {
      expect_euler(c.graph, *r.embedding);
    } else {
      ASSERT_FALSE(r.witness_edges.empty());
      EXPECT_FALSE(is_planar(witness_subgraph(c.graph, r.witness_edges)));
    }
  }
}

TEST(Planarity, KuratowskiGraphs) {
  EXPECT_FALSE(is_planar(complete_graph(5)));
  EXPECT_FALSE(is_planar(k33()));
  EXPECT_FALSE(is_planar(petersen()));
  EXPECT_TRUE(is_planar(complete_graph(4)));
  EXPECT_TRUE(is_planar(cube_graph()));
}

TEST(Planarity, WitnessIsMinimal) {
  for (const Graph& g : {complete_graph(5), k33(), petersen(), complete_graph(6)}) {
    const auto r = planar_embed(g);
    ASSERT_FALSE(r.planar());
    const auto w = r.witness_edges;
    for (size_t drop = 0; drop < w.size(); ++drop) {
      std::vector<int> less;
      for (size_t i = 0; i < w.size(); ++i)
        if (i != drop) less.push_back(w[i]);
      EXPECT_TRUE(is_planar(witness_subgraph(g, less)));
    }
  }
}

TEST(Planarity, CubeHasSixQuadrilateralFaces) {
  const auto r = planar_embed(cube_graph());
  ASSERT_TRUE(r.planar());
  const auto fs = faces(*r.embedding);
  ASSERT_EQ(fs.size(), 6u);
  for (const auto& f : fs) {
    EXPECT_TRUE(f.is_cycle);
    EXPECT_EQ(f.edges.count(), 4);
  }
}

TEST(Planarity, CycleSidesOnTheStrip) {
  const CorpusInstance s = strip(3);
  const auto r = planar_embed(s.graph);
  ASSERT_TRUE(r.planar());
  const auto& red = s.cycles.at("red");
  for (size_t i = 0; i < red.size(); ++i) {
    const SidePair sp = cycle_sides(*r.embedding, red[i]);
    // Layers below and above the red layer i+1.
    EXPECT_EQ(sp.side_a.count(), 5 * static_cast<int>(i + 1));
    EXPECT_EQ(sp.side_b.count(), 5 * static_cast<int>(red.size() - i));
    EXPECT_TRUE((sp.side_a & sp.side_b).empty());
    for (size_t j = 0; j < red.size(); ++j) EXPECT_TRUE(cycles_nested(*r.embedding, red[i], red[j]));
  }
}

TEST(Planarity, FacialCyclesOfThreeConnectedGraphsAreNested) {
  for (const Graph& g : {cube_graph(), complete_graph(4), framed_grid(4, 4)}) {
    const auto r = planar_embed(g);
    ASSERT_TRUE(r.planar());
    std::vector<EdgeSet> fam;
    for (const auto& f : faces(*r.embedding)) {
      ASSERT_TRUE(f.is_cycle);
      fam.push_back(f.edges);
      const SidePair sp = cycle_sides(*r.embedding, f.edges);
      EXPECT_TRUE(sp.side_b.empty());
      EXPECT_EQ(sp.side_a.count() + f.edges.count(), g.num_vertices());
    }
    for (const auto& a : fam)
      for (const auto& b : fam) EXPECT_TRUE(cycles_nested(*r.embedding, a, b));
    EXPECT_TRUE(facial_generation_certificate(*r.embedding, fam));
  }
}

TEST(Planarity, CertificateRejectsNonFacialAndIncompleteFamilies) {
  const Graph g = cube_graph();
  const auto r = planar_embed(g);
  ASSERT_TRUE(r.planar());
  const auto fs = faces(*r.embedding);
  std::vector<EdgeSet> fam;
  for (const auto& f : fs) fam.push_back(f.edges);
  fam.pop_back();
  fam.pop_back();
  const auto rep = facial_generation_report(*r.embedding, fam);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.dimension, 5);
  EXPECT_EQ(rep.rank, 4);
  const EdgeSet hexagon = z2_sum(std::vector<EdgeSet>{fs[0].edges, fs[1].edges});
  fam.push_back(hexagon);
  const auto rep2 = facial_generation_report(*r.embedding, fam);
  EXPECT_FALSE(rep2.all_facial);
  EXPECT_EQ(rep2.first_non_facial, static_cast<int>(fam.size()) - 1);
}

TEST(Planarity, RotationValidationAndMirror) {
  const Graph c = cycle_graph(4);
  EXPECT_THROW(RotationSystem(c, {{0}, {0, 1}, {1, 2}, {2, 3}}), InputError);
  const auto r = planar_embed(c);
  ASSERT_TRUE(r.planar());
  const RotationSystem m = r.embedding->mirror();
  EXPECT_EQ(faces(m).size(), faces(*r.embedding).size());
}

TEST(Planarity, RestrictionKeepsPlanarity) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 30; ++it) {
    const Graph g = random_planar(20, 15, rng);
    const auto r = planar_embed(g);
    ASSERT_TRUE(r.planar());
    VertexSet keep(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
      if (rng() % 3 != 0) keep.set(v);
    const RotationSystem sub = r.embedding->restrict_to(keep);
    if (is_connected(sub.graph())) expect_euler(sub.graph(), sub);
  }
}

TEST(Planarity, RandomPlanarGraphsEmbed) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 50; ++it) {
    const Graph g = random_planar(10 + it % 25, 30, rng);
    const auto r = planar_embed(g);
    ASSERT_TRUE(r.planar());
    expect_euler(g, *r.embedding);
    EXPECT_LE(g.num_edges(), 3 * g.num_vertices() - 6);
  }
}
