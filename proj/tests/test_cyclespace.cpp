#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cases.hpp"
#include "nestree/corpus.hpp"
#include "nestree/cyclespace.hpp"
#include "nestree/error.hpp"
#include "oracles.hpp"

using namespace nestree;

namespace {

std::vector<std::vector<char>> rows_of(const std::vector<EdgeSet>& fam, int m) {
  std::vector<std::vector<char>> rows;
  for (const auto& c : fam) {
    std::vector<char> r(static_cast<size_t>(m), 0);
    c.for_each([&](int e) { r[static_cast<size_t>(e)] = 1; });
    rows.push_back(r);
  }
  return rows;
}

// Number of Eulerian (even) subgraphs is 2^dim.
long even_subgraph_count(const Graph& g) {
  const int m = g.num_edges();
  long count = 0;
  for (long mask = 0; mask < (1L << m); ++mask) {
    std::vector<int> deg(static_cast<size_t>(g.num_vertices()), 0);
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) {
        ++deg[static_cast<size_t>(g.edge(e).first)];
        ++deg[static_cast<size_t>(g.edge(e).second)];
      }
    bool ok = true;
    for (int d : deg) ok = ok && d % 2 == 0;
    count += ok;
  }
  return count;
}

}  // namespace

TEST(CycleSpace, DimensionMatchesEvenSubgraphCount) {
  int tried = 0;
  for (const auto& c : cases::graph_cases()) {
    if (c.graph.num_edges() > 16) continue;
    ++tried;
    EXPECT_EQ(1L << cycle_space_dimension(c.graph), even_subgraph_count(c.graph));
  }
  EXPECT_GT(tried, 20);
}

TEST(CycleSpace, BasisIsIndependentAndSpanning) {
  for (const auto& c : cases::graph_cases()) {
    const auto basis = cycle_basis(c.graph);
    ASSERT_EQ(static_cast<int>(basis.size()), cycle_space_dimension(c.graph));
    EXPECT_EQ(oracle::gf2_rank(rows_of(basis, c.graph.num_edges())), static_cast<int>(basis.size()));
    for (const auto& b : basis) EXPECT_TRUE(is_cycle(c.graph, b));
    EXPECT_TRUE(generates_cycle_space(basis, c.graph).generates);
    EXPECT_EQ(gf2_rank(basis, c.graph.num_edges()), static_cast<int>(basis.size()));
  }
}

TEST(CycleSpace, SpansReturnsAValidCombination) {
  std::mt19937_64 rng(3);
  for (const auto& c : cases::graph_cases()) {
    const auto basis = cycle_basis(c.graph);
    if (basis.size() < 2) continue;
    std::vector<EdgeSet> part(basis.begin(), basis.begin() + static_cast<long>(basis.size() / 2));
    EdgeSet target = c.graph.empty_edge_set();
    for (const auto& b : basis)
      if (rng() & 1) target ^= b;
    const SpanResult r = spans(c.graph, part, target);
    std::vector<EdgeSet> with_target = part;
    with_target.push_back(target);
    const bool expected = oracle::gf2_rank(rows_of(with_target, c.graph.num_edges())) ==
                          oracle::gf2_rank(rows_of(part, c.graph.num_edges()));
    ASSERT_EQ(r.in_span, expected);
    if (r.in_span) {
      EdgeSet sum = c.graph.empty_edge_set();
      for (int i : r.combination) sum ^= part[static_cast<size_t>(i)];
      EXPECT_EQ(sum, target);
    }
  }
}

TEST(CycleSpace, OddTargetIsReported) {
  const Graph p = path_graph(3);
  EdgeSet t = p.empty_edge_set();
  t.set(0);
  const SpanResult r = spans(p, std::vector<EdgeSet>{}, t);
  EXPECT_FALSE(r.in_span);
  EXPECT_FALSE(r.target_even);
  EXPECT_THROW(generates_cycle_space(std::vector<EdgeSet>{t}, p), InputError);
}

TEST(CycleSpace, CycleSequenceAndWalks) {
  const Graph c = cycle_graph(5);
  const EdgeSet all = EdgeSet::full(5);
  EXPECT_TRUE(is_cycle(c, all));
  EXPECT_EQ(cycle_sequence(c, all), (std::vector<int>{0, 1, 2, 3, 4}));
  const std::vector<VertexId> ids{3, 2, 1, 0, 4};
  EXPECT_EQ(cycle_from_ids(c, ids), all);
  const std::vector<int> bad{0, 2, 4};
  EXPECT_THROW(closed_walk_edges(c, bad), InputError);
  EdgeSet two = c.empty_edge_set();
  two.set(0);
  two.set(2);
  EXPECT_FALSE(is_cycle(c, two));
  EXPECT_THROW(cycle_sequence(c, two), InputError);
}

TEST(CycleSpace, Z2SumChecksHost) {
  const EdgeSet a(3), b(4);
  EXPECT_THROW(z2_sum(std::vector<EdgeSet>{a, b}), InputError);
  EXPECT_THROW(z2_sum(std::vector<EdgeSet>{}), InputError);
  EXPECT_TRUE(z2_sum(std::vector<EdgeSet>{}, 3).empty());
  const long coeffs[] = {3, -2};
  EdgeSet x(3), y(3);
  x.set(0);
  y.set(1);
  EXPECT_EQ(z_sum_to_z2(coeffs, std::vector<EdgeSet>{x, y}), x);
}

// Every simple cycle of a small graph by brute force over edge subsets.
TEST(CycleSpace, ShortCyclesMatchBruteForce) {
  for (const auto& c : cases::graph_cases()) {
    if (c.graph.num_edges() > 16) continue;
    std::set<std::vector<uint64_t>> brute;
    int shortest = 0;
    for (long mask = 1; mask < (1L << c.graph.num_edges()); ++mask) {
      EdgeSet s = c.graph.empty_edge_set();
      for (int e = 0; e < c.graph.num_edges(); ++e)
        if (mask >> e & 1) s.set(e);
      if (s.count() <= 6 && is_cycle(c.graph, s)) {
        brute.insert(s.words());
        if (shortest == 0 || s.count() < shortest) shortest = s.count();
      }
    }
    const auto found = short_cycles(c.graph, 6);
    std::set<std::vector<uint64_t>> got;
    for (const auto& f : found) got.insert(f.words());
    EXPECT_EQ(got.size(), found.size());
    EXPECT_EQ(got, brute);
    for (size_t i = 1; i < found.size(); ++i) EXPECT_LE(found[i - 1].count(), found[i].count());
    if (shortest > 0) EXPECT_EQ(girth(c.graph), shortest);
  }
}

TEST(CycleSpace, GirthOfCorpusGraphs) {
  EXPECT_EQ(girth(cube_graph()), 4);
  EXPECT_EQ(girth(complete_graph(4)), 3);
  EXPECT_EQ(girth(cycle_graph(9)), 9);
  EXPECT_EQ(girth(path_graph(9)), 0);
  EXPECT_EQ(short_cycles(cube_graph(), 4).size(), 6u);
}

TEST(CycleSpace, ShortCycleBudget) {
  ShortCycleOptions tiny;
  tiny.step_budget = 10;
  EXPECT_THROW(short_cycles(complete_graph(7), 7, tiny), BudgetExceeded);
}
