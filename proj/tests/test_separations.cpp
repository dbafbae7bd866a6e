#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cases.hpp"
#include "nestree/corpus.hpp"
#include "nestree/error.hpp"
#include "nestree/separations.hpp"
#include "oracles.hpp"

using namespace nestree;

namespace {

uint64_t mask_of(const VertexSet& s) { return s.words().empty() ? 0 : s.words()[0]; }

std::set<oracle::Sep> as_masks(const std::vector<Separation>& seps) {
  std::set<oracle::Sep> out;
  for (const auto& s : seps) out.insert({mask_of(s.y), mask_of(s.s), mask_of(s.z)});
  return out;
}

Separation sep(const Graph& g, std::vector<VertexId> y, std::vector<VertexId> s, std::vector<VertexId> z) {
  return {g.vertex_set_of(y), g.vertex_set_of(s), g.vertex_set_of(z)};
}

}  // namespace

TEST(Separations, Validity) {
  const Graph p = path_graph(3);
  EXPECT_TRUE(is_separation(p, sep(p, {0}, {1}, {2})));
  EXPECT_FALSE(is_separation(p, sep(p, {0}, {}, {1, 2})));
  EXPECT_FALSE(is_separation(p, sep(p, {0}, {1}, {1, 2})));
  EXPECT_FALSE(is_separation(p, sep(p, {0}, {}, {2})));
  EXPECT_THROW(require_separation(p, sep(p, {0}, {}, {1, 2})), InputError);
  const Separation s = separation_from_sides(p, p.vertex_set_of(std::vector<VertexId>{1}), p.vertex_set_of(std::vector<VertexId>{2}));
  EXPECT_EQ(s.y, p.vertex_set_of(std::vector<VertexId>{0}));
}

TEST(Separations, OrderAndNestedness) {
  const Graph p = path_graph(5);
  const Separation a = sep(p, {0}, {1}, {2, 3, 4});
  const Separation b = sep(p, {0, 1, 2}, {3}, {4});
  EXPECT_TRUE(sep_leq(a, b));
  EXPECT_TRUE(sep_less(a, b));
  EXPECT_FALSE(sep_leq(b, a));
  EXPECT_TRUE(sep_leq(a, a));
  EXPECT_FALSE(sep_less(a, a));
  EXPECT_TRUE(sep_nested(a, b.flip()));
  const Graph c = cycle_graph(4);
  const Separation x = sep(c, {1}, {0, 2}, {3});
  const Separation y = sep(c, {0}, {1, 3}, {2});
  EXPECT_FALSE(sep_nested(x, y));
  EXPECT_THROW(sep_leq(a, x), InputError);
}

TEST(Separations, TightOnCycleCounts) {
  // A tight 2-separation of C_n is a pair of non-adjacent vertices, in two
  // orientations.
  for (int n = 4; n <= 10; ++n) {
    const auto t = enumerate_tight(cycle_graph(n), 2);
    EXPECT_EQ(static_cast<int>(t.size()), n * (n - 3));
    for (const auto& s : t) EXPECT_TRUE(is_tight(cycle_graph(n), s));
  }
}

TEST(Separations, TightMatchesBruteForceOnAllSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    for (long mask = 0; mask < (1L << pairs.size()); ++mask) {
      std::vector<std::pair<int, int>> e;
      for (size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) e.push_back(pairs[i]);
      const Graph g = Graph::with_vertices(n, e);
      for (int k = 0; k <= std::min(n, 4); ++k) ASSERT_EQ(as_masks(enumerate_tight(g, k)), oracle::tight_separations(g, k)) << n << " " << mask;
    }
  }
}

TEST(Separations, TightMatchesBruteForceOnRandomGraphs) {
  for (const auto& c : cases::graph_cases()) {
    if (c.graph.num_vertices() > 12) continue;
    for (int k = 1; k <= 3; ++k) ASSERT_EQ(as_masks(enumerate_tight(c.graph, k)), oracle::tight_separations(c.graph, k));
  }
}

TEST(Separations, TightOutputIsOrderedAndSymmetric) {
  const auto t = enumerate_tight(cube_graph(), 3);
  ASSERT_FALSE(t.empty());
  for (size_t i = 1; i < t.size(); ++i) EXPECT_TRUE(t[i - 1] < t[i]);
  std::set<Separation> all(t.begin(), t.end());
  for (const auto& s : t) EXPECT_TRUE(all.count(s.flip()));
}

TEST(Separations, TightBudget) {
  EXPECT_THROW(enumerate_tight(cube_graph(), 5), BudgetExceeded);
  TightOptions tiny;
  tiny.separator_budget = 5;
  EXPECT_THROW(enumerate_tight(cube_graph(), 3, tiny), BudgetExceeded);
}

TEST(Separations, FamilyVerifyFindsMissingFlipAndCrossing) {
  const Graph c = cycle_graph(6);
  SeparationFamily f({sep(c, {1, 2}, {0, 3}, {4, 5})});
  auto r = family_verify(f);
  EXPECT_FALSE(r.symmetric);
  EXPECT_EQ(r.missing_flip, 0);
  EXPECT_FALSE(f.symmetric_verified());
  SeparationFamily g = SeparationFamily::symmetric_closure(
      {sep(c, {1, 2}, {0, 3}, {4, 5}), sep(c, {2, 3}, {1, 4}, {5, 0})});
  EXPECT_EQ(g.size(), 4u);
  r = family_verify(g);
  EXPECT_TRUE(r.symmetric);
  EXPECT_FALSE(r.nested);
  ASSERT_TRUE(r.crossing.has_value());
  EXPECT_EQ(r.max_order, 2);
}

TEST(Separations, FamilyChainsOnAPath) {
  const Graph p = path_graph(6);
  std::vector<Separation> seps;
  for (int i = 1; i <= 4; ++i) {
    std::vector<VertexId> y, z;
    for (int v = 0; v < i; ++v) y.push_back(v);
    for (int v = i + 1; v < 6; ++v) z.push_back(v);
    seps.push_back(sep(p, y, {i}, z));
  }
  SeparationFamily f = SeparationFamily::symmetric_closure(seps);
  const auto r = family_verify(f);
  EXPECT_TRUE(r.nested);
  EXPECT_TRUE(r.symmetric);
  EXPECT_TRUE(f.nested_verified());
  EXPECT_EQ(r.longest_chain, 4u);
}

TEST(Separations, CycleSeparationsOnTheStrip) {
  const CorpusInstance s = strip(4);
  const auto r = planar_embed(s.graph);
  ASSERT_TRUE(r.planar());
  for (const auto& c : s.cycles.at("red")) {
    const CycleSeparations cs = separation_from_cycle(*r.embedding, c);
    EXPECT_TRUE(cs.proper);
    EXPECT_TRUE(is_separation(s.graph, cs.forward));
    EXPECT_EQ(cs.backward, cs.forward.flip());
    EXPECT_TRUE(is_tight(s.graph, cs.forward));
    EXPECT_EQ(cs.forward.order(), 5);
  }
}

TEST(Separations, RandomNestedFamiliesAreNested) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 40; ++it) {
    const Graph g = random_planar(25, 30, rng);
    const auto r = planar_embed(g);
    ASSERT_TRUE(r.planar());
    const auto cycles = random_nested_cycles(g, 12, rng);
    std::vector<Separation> seps;
    for (const auto& c : cycles) {
      const auto cs = separation_from_cycle(*r.embedding, c);
      EXPECT_TRUE(cs.proper);
      seps.push_back(cs.forward);
    }
    SeparationFamily f = SeparationFamily::symmetric_closure(seps);
    const auto rep = family_verify(f);
    EXPECT_TRUE(rep.nested);
    EXPECT_TRUE(rep.symmetric);
  }
}
