#include <gtest/gtest.h>

#include <random>

#include "minor_oracle.hpp"
#include "nestree/corpus.hpp"
#include "nestree/error.hpp"
#include "nestree/pipeline.hpp"
#include "nestree/tutte.hpp"
#include "oracles.hpp"

using namespace nestree;

namespace {

void expect_canonical_shape(const Graph& g, const TreeDecomposition& td) {
  const DecompositionReport r = verify_td(g, td);
  ASSERT_TRUE(r.valid) << r.witness;
  EXPECT_LE(r.adhesion, 2);
  for (const auto& s : edge_separations(td)) EXPECT_TRUE(is_tight(g, s));
  for (int t = 0; t < td.num_nodes(); ++t) {
    if (td.kind[static_cast<size_t>(t)] == NodeKind::kHub) {
      EXPECT_LE(td.bags[static_cast<size_t>(t)].count(), 2);
      continue;
    }
    EXPECT_NO_THROW(classify_torso(torso(td, t)));
  }
}

}  // namespace

TEST(Tutte, ClassifyTorso) {
  EXPECT_EQ(classify_torso(complete_graph(2)), TorsoClass::kCompleteAtMostTwo);
  EXPECT_EQ(classify_torso(complete_graph(1)), TorsoClass::kCompleteAtMostTwo);
  EXPECT_EQ(classify_torso(cycle_graph(5)), TorsoClass::kCycle);
  EXPECT_EQ(classify_torso(complete_graph(3)), TorsoClass::kCycle);
  EXPECT_EQ(classify_torso(complete_graph(4)), TorsoClass::kThreeConnected);
  EXPECT_EQ(classify_torso(cube_graph()), TorsoClass::kThreeConnected);
  EXPECT_THROW(classify_torso(path_graph(3)), InternalError);
  EXPECT_STREQ(to_string(TorsoClass::kCompleteAtMostTwo), "complete-of-order-at-most-2");
}

TEST(Tutte, SmallGraphs) {
  const TreeDecomposition c5 = tutte_decomposition(cycle_graph(5));
  EXPECT_EQ(c5.num_nodes(), 1);
  const TreeDecomposition k4 = tutte_decomposition(complete_graph(4));
  EXPECT_EQ(k4.num_nodes(), 1);
  const Graph d = diamond_graph();
  const TreeDecomposition dt = tutte_decomposition(d);
  ASSERT_EQ(dt.num_nodes(), 3);
  int hubs = 0;
  for (int t = 0; t < 3; ++t) {
    if (dt.kind[static_cast<size_t>(t)] == NodeKind::kHub) {
      ++hubs;
      EXPECT_EQ(dt.bags[static_cast<size_t>(t)], d.vertex_set_of(std::vector<VertexId>{0, 1}));
    } else {
      EXPECT_EQ(classify_torso(torso(dt, t)), TorsoClass::kCycle);
    }
  }
  EXPECT_EQ(hubs, 1);
  expect_canonical_shape(d, dt);
  EXPECT_THROW(tutte_decomposition(Graph::with_vertices(2, {})), InputError);
}

TEST(Tutte, PathHasCutVertexHubs) {
  const Graph p = path_graph(4);
  const TreeDecomposition td = tutte_decomposition(p);
  // Three edge blocks and two cut vertices.
  EXPECT_EQ(td.num_nodes(), 5);
  expect_canonical_shape(p, td);
}

TEST(Tutte, StarCentersItsHub) {
  const Graph s({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}});
  const TreeDecomposition td = tutte_decomposition(s);
  EXPECT_EQ(td.num_nodes(), 4);
  const auto hub = td.find_bag(s.vertex_set_of(std::vector<VertexId>{0}));
  ASSERT_TRUE(hub.has_value());
  EXPECT_EQ(td.tree.degree(*hub), 3);
}

TEST(Tutte, SupergraphOfTheDiamond) {
  const Graph d = diamond_graph();
  const Supergraph sg = adhesion_supergraph(d, tutte_decomposition(d));
  EXPECT_TRUE(sg.added.empty());
  EXPECT_TRUE(sg.planar);
  const Graph c6 = cycle_graph(6);
  std::vector<std::pair<int, int>> chords{{0, 3}};
  const Graph theta = c6.with_added_edges(chords);
  // Theta on two degree-3 vertices: a bond with three polygon paths.
  const TreeDecomposition tt = tutte_decomposition(theta);
  expect_canonical_shape(theta, tt);
  const Supergraph st = adhesion_supergraph(theta, tt);
  EXPECT_TRUE(st.planar);
}

TEST(Tutte, RandomGraphsAreDecomposedCanonically) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 80; ++it) {
    const int n = 2 + static_cast<int>(rng() % 14);
    const int m = n - 1 + static_cast<int>(rng() % (n + 3));
    const Graph g = random_connected(n, m, rng);
    const TreeDecomposition td = tutte_decomposition(g);
    expect_canonical_shape(g, td);
    for (int t = 0; t < td.num_nodes(); ++t) EXPECT_TRUE(oracle::torso_is_minor(g, torso(td, t)));
    if (n <= 12) {
      const Action a = automorphism_group(g).action;
      const CanonicityReport c = canonicity_check(a, td);
      EXPECT_TRUE(c.canonical) << c.witness;
    }
  }
}

TEST(Tutte, TightSeparationsAgreeWithOracle) {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 40; ++it) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g = random_connected(n, n + static_cast<int>(rng() % 5), rng);
    const auto tight = oracle::tight_separations(g, 2);
    for (const auto& s : edge_separations(tutte_decomposition(g)))
      EXPECT_TRUE(tight.count({s.y.words()[0], s.s.words()[0], s.z.words()[0]}));
  }
}

TEST(Tutte, MinorOracleRejectsNonMinors) {
  // K4 is not a minor of a cycle.
  const Graph c = cycle_graph(6);
  const Graph k4({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_FALSE(oracle::torso_is_minor(c, k4));
  const Graph tri({0, 2, 4}, {{0, 2}, {2, 4}, {0, 4}});
  EXPECT_TRUE(oracle::torso_is_minor(c, tri));
}

TEST(Tutte, GridOfGridsGeneralPipeline) {
  const CorpusInstance gg = grid_of_grids(3, 4, 4);
  const GeneralResult r = general_pipeline(gg.graph, gg.actions.at("trivial"));
  EXPECT_TRUE(r.report.valid) << r.report.witness;
  EXPECT_TRUE(r.supergraph.planar);
  int three = 0;
  for (const auto c : r.torso_classes) {
    EXPECT_NE(c, TorsoClass::kCycle);
    three += c == TorsoClass::kThreeConnected;
  }
  EXPECT_EQ(three, 3);
}

TEST(Tutte, GeneralPipelineOnPlanarThreeConnectedGraph) {
  const Graph q = cube_graph();
  const GeneralResult r = general_pipeline(q, automorphism_group(q).action);
  EXPECT_EQ(r.outer.num_nodes(), 1);
  ASSERT_EQ(r.torso_classes.size(), 1u);
  EXPECT_EQ(r.torso_classes[0], TorsoClass::kThreeConnected);
  EXPECT_TRUE(r.report.valid);
}

TEST(Tutte, NonPlanarSupergraphIsRejected) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) e.emplace_back(i, j);
  const Graph k5 = Graph::with_vertices(5, e);
  EXPECT_THROW(general_pipeline(k5, Action{k5, {}, {}}), VerificationError);
}
