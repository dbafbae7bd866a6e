#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "nestree/cayley.hpp"
#include "nestree/corpus.hpp"
#include "nestree/error.hpp"
#include "nestree/planarity.hpp"
#include "nestree/symmetry.hpp"
#include "oracles.hpp"

using namespace nestree;

TEST(Cayley, ParsesBothGrammars) {
  const Presentation p = Presentation::parse("gens: a(4) b(2) c(2); rels: abab, acac");
  const Presentation q = Presentation::parse("<a,b,c | a^4, b^2, c^2, abab, acac>");
  ASSERT_EQ(p.generators.size(), 3u);
  EXPECT_FALSE(p.generators[0].involution);
  EXPECT_TRUE(p.generators[1].involution);
  EXPECT_TRUE(p.generators[2].involution);
  EXPECT_EQ(p.to_string(), q.to_string());
  EXPECT_EQ(p.max_relator_length(), 4);
}

TEST(Cayley, RejectsBadPresentations) {
  EXPECT_THROW(Presentation::parse("<a,b | c>"), InputError);
  EXPECT_THROW(Presentation::parse("gens: ; rels: "), InputError);
  EXPECT_THROW(Presentation::parse("<a | a^>"), InputError);
}

TEST(Cayley, FreeGroupBall) {
  const LabeledBall b = cayley_ball(Presentation::parse("<a|>"), 2);
  EXPECT_EQ(b.graph.num_vertices(), 5);
  EXPECT_EQ(b.graph.num_edges(), 4);
  EXPECT_FALSE(b.complete);
}

TEST(Cayley, FiniteCyclicGroupCloses) {
  const LabeledBall b = cayley_ball(Presentation::parse("<a|a^4>"), 5);
  EXPECT_TRUE(b.complete);
  EXPECT_EQ(b.graph.num_vertices(), 4);
  EXPECT_EQ(b.graph.num_edges(), 4);
  EXPECT_EQ(b.exact_radius, 5);
}

TEST(Cayley, ElementaryAbelianGroupGivesTheCube) {
  const LabeledBall b = cayley_ball(Presentation::parse("<a,b,c | a^2,b^2,c^2,abab,acac,bcbc>"), 4);
  EXPECT_TRUE(b.complete);
  EXPECT_TRUE(find_isomorphism(b.graph, cube_graph()).has_value());
  EXPECT_EQ(partial_translations(b).size(), 8u);
}

TEST(Cayley, SquareAndInvolutionsBallMatchesExplicitGroup) {
  const LabeledBall b = cayley_ball(Presentation::parse(fig1_presentation()), 6);
  const auto ref = oracle::fig1_group_ball(6);
  ASSERT_EQ(b.graph.num_vertices(), ref.graph.num_vertices());
  ASSERT_EQ(b.graph.num_edges(), ref.graph.num_edges());
  EXPECT_EQ(b.graph.num_vertices(), 44);
  std::map<int, int> h1, h2;
  for (int d : b.depth) ++h1[d];
  for (int d : ref.depth) ++h2[d];
  EXPECT_EQ(h1, h2);
  std::map<char, int> l1, l2;
  for (int e = 0; e < b.graph.num_edges(); ++e) ++l1[b.edge_symbol(e)];
  for (char c : ref.letter) ++l2[c];
  EXPECT_EQ(l1, l2);
  AutomorphismOptions big;
  big.max_vertices = 64;
  EXPECT_TRUE(find_isomorphism(b.graph, ref.graph, big).has_value());
  EXPECT_TRUE(is_planar(b.graph));
}

TEST(Cayley, FreeProductBallSize) {
  const LabeledBall b = cayley_ball(Presentation::parse(fig2_presentation()), 3);
  // Alternating words over Z^2 and Z/2; 4k elements of Z^2 have length k.
  auto sphere = [](int k) { return k == 0 ? 1 : 4 * k; };
  std::function<long(int, int)> count = [&](int budget, int last) -> long {
    long total = 1;
    if (last != 1)
      for (int k = 1; k <= budget; ++k) total += sphere(k) * count(budget - k, 1);
    if (last != 2 && budget >= 1) total += count(budget - 1, 2);
    return total;
  };
  EXPECT_EQ(b.graph.num_vertices(), count(3, 0));
}

TEST(Cayley, GeodesicWordsReachTheirVertex) {
  const LabeledBall b = cayley_ball(Presentation::parse(fig1_presentation()), 5);
  for (int v = 0; v < b.graph.num_vertices(); ++v) {
    EXPECT_EQ(static_cast<int>(b.words[v].size()), b.depth[v]);
    EXPECT_EQ(b.follow(0, b.words[v]), v);
  }
}

TEST(Cayley, PartialTranslationsPreserveAdjacencyAndLabels) {
  const LabeledBall b = cayley_ball(Presentation::parse("<a,b | abAB>"), 5);
  const auto ts = partial_translations(b);
  ASSERT_FALSE(ts.empty());
  for (const auto& t : ts) {
    EXPECT_TRUE(is_partial_automorphism(b.graph, t.map));
    for (int e = 0; e < b.graph.num_edges(); ++e) {
      const auto [u, v] = b.graph.edge(e);
      if (!t.map.defined(u) || !t.map.defined(v)) continue;
      const auto f = b.graph.edge_index(t.map(u), t.map(v));
      ASSERT_TRUE(f.has_value());
      EXPECT_EQ(b.edge_generator[*f], b.edge_generator[e]);
    }
  }
}

TEST(Cayley, BudgetIsEnforced) {
  CayleyOptions small;
  small.vertex_cap = 20;
  EXPECT_THROW(cayley_ball(Presentation::parse("<a,b|>"), 6, small), BudgetExceeded);
}

TEST(Cayley, SubgroupBallOfAandCIsTheCube) {
  const LabeledBall b = cayley_ball(Presentation::parse(fig1_presentation()), 6);
  const Graph sub = coset_subgraph(b, {0, 2});
  EXPECT_TRUE(find_isomorphism(sub, cube_graph()).has_value());
}
