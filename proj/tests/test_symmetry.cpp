#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cases.hpp"
#include "nestree/corpus.hpp"
#include "nestree/error.hpp"
#include "nestree/pipeline.hpp"
#include "nestree/planarity.hpp"
#include "nestree/symmetry.hpp"
#include "oracles.hpp"

using namespace nestree;

namespace {

Action full_aut(const Graph& g) { return automorphism_group(g).action; }

std::vector<EdgeSet> facial_cycles(const Graph& g) {
  const auto r = planar_embed(g);
  std::vector<EdgeSet> out;
  for (const auto& f : faces(*r.embedding)) out.push_back(f.edges);
  return out;
}

// Closure of the identity under the generators, by brute force.
size_t group_closure_size(const Action& a) {
  const int n = a.host.num_vertices();
  std::vector<int> id(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) id[static_cast<size_t>(v)] = v;
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> queue{id};
  for (size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : a.generators) {
      std::vector<int> next(static_cast<size_t>(n));
      for (int v = 0; v < n; ++v) next[static_cast<size_t>(v)] = g[static_cast<size_t>(queue[i][static_cast<size_t>(v)])];
      if (seen.insert(next).second) queue.push_back(next);
    }
  return seen.size();
}

}  // namespace

TEST(Symmetry, SmallGroupOrders) {
  EXPECT_EQ(automorphism_group(cycle_graph(4)).order, "8");
  EXPECT_EQ(automorphism_group(path_graph(3)).order, "2");
  EXPECT_EQ(automorphism_group(cube_graph()).order, "48");
  EXPECT_EQ(automorphism_group(complete_graph(5)).order, "120");
  EXPECT_EQ(automorphism_group(diamond_graph()).order, "4");
  EXPECT_EQ(automorphism_group(Graph::with_vertices(1, {})).order, "1");
}

TEST(Symmetry, OrdersMatchPermutationOracle) {
  for (const auto& c : cases::graph_cases()) {
    if (c.automorphisms < 0) continue;
    const AutomorphismGroup grp = automorphism_group(c.graph);
    ASSERT_EQ(grp.order, std::to_string(c.automorphisms));
    ASSERT_EQ(grp.order, std::to_string(oracle::automorphism_count(c.graph)));
    for (const auto& p : grp.action.generators) EXPECT_TRUE(is_automorphism(c.graph, p));
    EXPECT_EQ(group_closure_size(grp.action), static_cast<size_t>(c.automorphisms));
  }
}

TEST(Symmetry, StrongGeneratorOrbitProduct) {
  for (const Graph& g : {cube_graph(), framed_grid(4, 4), strip(3).graph}) {
    const AutomorphismGroup grp = automorphism_group(g);
    long prod = 1;
    for (int s : grp.orbit_sizes) prod *= s;
    EXPECT_EQ(std::to_string(prod), grp.order);
    EXPECT_EQ(group_closure_size(grp.action), static_cast<size_t>(prod));
  }
}

TEST(Symmetry, BudgetIsEnforced) {
  AutomorphismOptions small;
  small.max_vertices = 4;
  EXPECT_THROW(automorphism_group(cube_graph(), small), BudgetExceeded);
  AutomorphismOptions tiny;
  tiny.node_budget = 3;
  EXPECT_THROW(automorphism_group(cube_graph(), tiny), BudgetExceeded);
}

TEST(Symmetry, Orbits) {
  const Graph p = path_graph(3);
  EXPECT_EQ(vertex_orbits(full_aut(p)), (std::vector<std::vector<int>>{{0, 2}, {1}}));
  const Graph q = cube_graph();
  const Action aq = full_aut(q);
  EXPECT_EQ(vertex_orbits(aq).size(), 1u);
  EXPECT_EQ(edge_orbits(aq).size(), 1u);
  EXPECT_EQ(cycle_orbits(aq, facial_cycles(q)).size(), 1u);
  const Graph d = diamond_graph();
  EXPECT_EQ(vertex_orbits(full_aut(d)), (std::vector<std::vector<int>>{{0, 1}, {2, 3}}));
  EXPECT_EQ(edge_orbits(full_aut(d)).size(), 2u);
}

TEST(Symmetry, OrbitsPartitionAndAreClosed) {
  std::mt19937_64 rng(9);
  for (int it = 0; it < 20; ++it) {
    const Graph g = random_connected(9, 12, rng);
    const Action a = full_aut(g);
    const auto orbs = vertex_orbits(a);
    std::vector<int> cls(static_cast<size_t>(g.num_vertices()), -1);
    for (size_t i = 0; i < orbs.size(); ++i)
      for (int v : orbs[i]) {
        ASSERT_EQ(cls[static_cast<size_t>(v)], -1);
        cls[static_cast<size_t>(v)] = static_cast<int>(i);
      }
    for (int c : cls) ASSERT_GE(c, 0);
    for (const auto& p : a.generators)
      for (int v = 0; v < g.num_vertices(); ++v) EXPECT_EQ(cls[static_cast<size_t>(v)], cls[static_cast<size_t>(p[static_cast<size_t>(v)])]);
  }
}

TEST(Symmetry, InvarianceExamples) {
  const Graph q = cube_graph();
  const Action aq = full_aut(q);
  EXPECT_TRUE(is_invariant(aq, std::vector<EdgeSet>{}).invariant);
  EXPECT_TRUE(is_invariant(aq, facial_cycles(q)).invariant);
  const CorpusInstance s = strip(5);
  const auto& red = s.cycles.at("red");
  const auto single = is_invariant(s.actions.at("shift"), std::vector<EdgeSet>{red[2]});
  EXPECT_FALSE(single.invariant);
  EXPECT_FALSE(single.witness.empty());
  EXPECT_TRUE(is_invariant(s.actions.at("shift"), red).invariant);
  EXPECT_EQ(is_invariant(s.actions.at("shift"), red).orbit_count, 1);
  // Layer reversal swaps the outermost red cycles.
  EXPECT_FALSE(is_invariant(s.actions.at("aut"), std::vector<EdgeSet>{red[0]}).invariant);
  EXPECT_TRUE(is_invariant(s.actions.at("aut"), std::vector<EdgeSet>{red[0], red[4]}).invariant);
}

TEST(Symmetry, PartialMapsRespectTheirDomain) {
  const CorpusInstance s = strip(5);
  const auto maps = action_maps(s.actions.at("shift"));
  ASSERT_EQ(maps.size(), 5u);
  EXPECT_EQ(maps[3].name, "p0");
  EXPECT_EQ(maps[4].name, "p0^-1");
  EXPECT_FALSE(maps[3].total);
  const VertexSet top = s.graph.vertex_set_of(std::vector<VertexId>{30, 31, 32, 33, 34});
  EXPECT_FALSE(apply(maps[3], top).has_value());
  const VertexSet low = s.graph.vertex_set_of(std::vector<VertexId>{0, 1, 2, 3, 4});
  EXPECT_EQ(*apply(maps[3], low), s.graph.vertex_set_of(std::vector<VertexId>{5, 6, 7, 8, 9}));
  EXPECT_FALSE(apply(maps[4], low).has_value());
  EXPECT_TRUE(is_partial_automorphism(s.graph, s.actions.at("shift").partial[0]));
}

TEST(Symmetry, ValidateRejectsNonAutomorphisms) {
  Action a{path_graph(3), {{1, 0, 2}}, {}};
  EXPECT_THROW(validate(a), InputError);
  Action b{path_graph(3), {{0, 1}}, {}};
  EXPECT_THROW(validate(b), InputError);
  Action c{path_graph(3), {}, {PartialMap{{1, 2, -1}}}};
  EXPECT_NO_THROW(validate(c));
  Action d{path_graph(3), {}, {PartialMap{{2, -1, 0}}}};
  EXPECT_NO_THROW(validate(d));
  Action e{path_graph(3), {}, {PartialMap{{0, 2, -1}}}};
  EXPECT_THROW(validate(e), InputError);
}

TEST(Symmetry, IsomorphismSearch) {
  const Graph q = cube_graph();
  std::vector<int> perm{5, 2, 7, 0, 3, 6, 1, 4};
  std::vector<std::pair<VertexId, VertexId>> e;
  for (const auto& [u, v] : q.edges()) e.emplace_back(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
  const Graph r = Graph::with_vertices(8, e);
  const auto iso = find_isomorphism(q, r);
  ASSERT_TRUE(iso.has_value());
  for (const auto& [u, v] : q.edges()) EXPECT_TRUE(r.adjacent((*iso)[static_cast<size_t>(u)], (*iso)[static_cast<size_t>(v)]));
  EXPECT_FALSE(find_isomorphism(q, framed_grid(3, 3)).has_value());
  EXPECT_FALSE(find_isomorphism(cycle_graph(8), q).has_value());
}

TEST(Symmetry, SeparationOrbitsOnCube) {
  const Graph q = cube_graph();
  const auto tight = enumerate_tight(q, 3);
  const auto orbs = separation_orbits(full_aut(q), tight);
  size_t total = 0;
  for (const auto& o : orbs) total += o.size();
  EXPECT_EQ(total, tight.size());
  // ({v}, N(v), rest) for the 8 vertices v.
  bool found = false;
  for (const auto& o : orbs)
    found = found || (o.size() == 8 && tight[static_cast<size_t>(o[0])].y.count() == 1);
  EXPECT_TRUE(found);
}

TEST(Symmetry, CanonicityExamples) {
  const Graph q = cube_graph();
  EXPECT_TRUE(canonicity_check(full_aut(q), trivial_decomposition(q)).canonical);

  const CorpusInstance s = strip(5);
  const PlanarResult pr = planar_structure_pipeline(s.graph, s.actions.at("shift"), s.cycles.at("red"));
  const CanonicityReport rep = canonicity_check(s.actions.at("shift"), pr.td);
  EXPECT_TRUE(rep.canonical);
  EXPECT_EQ(rep.edge_orbit_count, static_cast<int>(cycle_orbits(s.actions.at("shift"), s.cycles.at("red")).size()));

  TreeDecomposition broken = pr.td;
  broken.bags[0].set(s.graph.index(34));
  const CanonicityReport bad = canonicity_check(s.actions.at("aut"), broken);
  EXPECT_FALSE(bad.canonical);
  EXPECT_FALSE(bad.witness.empty());
  EXPECT_GE(bad.witness_node, 0);

  Action foreign{cube_graph(), {}, {}};
  EXPECT_THROW(canonicity_check(foreign, pr.td), InputError);
}
