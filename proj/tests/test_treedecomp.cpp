#include <gtest/gtest.h>

#include <random>
#include <set>

#include "nestree/corpus.hpp"
#include "nestree/error.hpp"
#include "nestree/pipeline.hpp"
#include "nestree/quasi_isometry.hpp"
#include "nestree/symmetry.hpp"
#include "nestree/treedecomp.hpp"
#include "oracles.hpp"

using namespace nestree;

namespace {

Separation sep(const Graph& g, std::vector<VertexId> y, std::vector<VertexId> s, std::vector<VertexId> z) {
  return {g.vertex_set_of(y), g.vertex_set_of(s), g.vertex_set_of(z)};
}

// Maximal vertex sets not split by any member, by brute force over subsets.
std::set<uint64_t> brute_blocks(const Graph& g, const SeparationFamily& fam) {
  const int n = g.num_vertices();
  std::vector<uint64_t> ok;
  for (uint64_t x = 1; x < (uint64_t{1} << n); ++x) {
    bool good = true;
    for (const auto& s : fam.items()) {
      const uint64_t y = s.y.words()[0], z = s.z.words()[0];
      if ((x & y) && (x & z)) good = false;
    }
    if (good) ok.push_back(x);
  }
  std::set<uint64_t> out;
  for (uint64_t x : ok) {
    bool maximal = true;
    for (uint64_t w : ok)
      if (w != x && (w & x) == x) maximal = false;
    if (maximal) out.insert(x);
  }
  return out;
}

SeparationFamily family_from_cycles(const Graph& g, const std::vector<EdgeSet>& cycles) {
  const auto r = planar_embed(g);
  std::vector<Separation> seps;
  for (const auto& c : cycles) {
    const auto cs = separation_from_cycle(*r.embedding, c);
    if (cs.proper) seps.push_back(cs.forward);
  }
  return SeparationFamily::symmetric_closure(seps);
}

std::multiset<std::vector<uint64_t>> edge_sep_set(const std::vector<Separation>& seps) {
  std::multiset<std::vector<uint64_t>> out;
  for (const auto& s : seps) {
    std::vector<uint64_t> k = s.y.words();
    k.insert(k.end(), s.s.words().begin(), s.s.words().end());
    k.insert(k.end(), s.z.words().begin(), s.z.words().end());
    out.insert(k);
  }
  return out;
}

}  // namespace

TEST(TreeDecomp, TrivialDecompositionIsValid) {
  const Graph q = cube_graph();
  const TreeDecomposition td = trivial_decomposition(q);
  const DecompositionReport r = verify_td(q, td);
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.width, 7);
  EXPECT_EQ(r.adhesion, 0);
  EXPECT_TRUE(edge_separations(td).empty());
}

TEST(TreeDecomp, PathWithOneSeparation) {
  const Graph p = path_graph(3);
  SeparationFamily fam = SeparationFamily::symmetric_closure({sep(p, {0}, {1}, {2})});
  BuildReport br;
  const TreeDecomposition td = build_from_nested(p, fam, &br);
  ASSERT_EQ(td.num_nodes(), 2);
  EXPECT_EQ(td.bags[0], p.vertex_set_of(std::vector<VertexId>{0, 1}));
  EXPECT_EQ(td.bags[1], p.vertex_set_of(std::vector<VertexId>{1, 2}));
  EXPECT_EQ(td.adhesion_set(0), p.vertex_set_of(std::vector<VertexId>{1}));
  EXPECT_TRUE(verify_td(p, td).valid);
  EXPECT_EQ(br.dropped_non_proper, 0);
  EXPECT_EQ(br.input_size, 2);
}

TEST(TreeDecomp, NonProperMembersAreDropped) {
  const Graph p = path_graph(3);
  SeparationFamily fam = SeparationFamily::symmetric_closure({sep(p, {0}, {1}, {2}), sep(p, {}, {0, 1}, {2})});
  BuildReport br;
  const TreeDecomposition td = build_from_nested(p, fam, &br);
  EXPECT_EQ(br.dropped_non_proper, 2);
  EXPECT_EQ(td.num_nodes(), 2);
}

TEST(TreeDecomp, CrossingFamilyIsRejected) {
  const Graph c = cycle_graph(4);
  SeparationFamily fam = SeparationFamily::symmetric_closure({sep(c, {1}, {0, 2}, {3}), sep(c, {0}, {1, 3}, {2})});
  EXPECT_THROW(build_from_nested(c, fam), VerificationError);
  EXPECT_THROW(n_blocks(c, fam), VerificationError);
  SeparationFamily one({sep(c, {1}, {0, 2}, {3})});
  EXPECT_THROW(build_from_nested(c, one), VerificationError);
}

TEST(TreeDecomp, NBlocksMatchBruteForce) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int it = 0; it < 60; ++it) {
    const Graph g = random_planar(6 + it % 8, 10, rng);
    const auto cycles = random_nested_cycles(g, 6, rng);
    const SeparationFamily fam = family_from_cycles(g, cycles);
    std::set<uint64_t> got;
    for (const auto& b : n_blocks(g, fam)) got.insert(b.words()[0]);
    EXPECT_EQ(got, brute_blocks(g, fam));
    ++checked;
  }
  EXPECT_EQ(checked, 60);
}

TEST(TreeDecomp, EdgeSeparationsReproduceTheFamily) {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 60; ++it) {
    const Graph g = random_planar(10 + it % 25, 20, rng);
    const SeparationFamily fam = family_from_cycles(g, random_nested_cycles(g, 10, rng));
    const TreeDecomposition td = build_from_nested(g, fam);
    const DecompositionReport r = verify_td(g, td);
    ASSERT_TRUE(r.valid) << r.witness;
    EXPECT_EQ(edge_sep_set(edge_separations(td)), edge_sep_set(fam.items()));
    for (int t = 0; t < td.num_nodes(); ++t) {
      // Hubs are exactly the nodes whose bag is a separator.
      bool is_sep = false;
      for (const auto& s : fam.items()) is_sep = is_sep || s.s == td.bags[static_cast<size_t>(t)];
      if (td.kind[static_cast<size_t>(t)] == NodeKind::kHub) EXPECT_TRUE(is_sep);
    }
  }
}

TEST(TreeDecomp, StripPathDecomposition) {
  const CorpusInstance s = strip(5);
  const SeparationFamily fam = family_from_cycles(s.graph, s.cycles.at("red"));
  const TreeDecomposition td = build_from_nested(s.graph, fam);
  ASSERT_EQ(td.num_nodes(), 6);
  EXPECT_EQ(td.tree.num_edges(), 5);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(td.adhesion_set(i), cycle_vertices(s.graph, s.cycles.at("red")[static_cast<size_t>(i)]));
  const DecompositionReport r = verify_td(s.graph, td);
  EXPECT_TRUE(r.valid);
  EXPECT_TRUE(r.parts_two_connected);
  EXPECT_EQ(r.adhesion, 5);
  EXPECT_EQ(r.width, 9);
}

TEST(TreeDecomp, BrokenDecompositionsAreReported) {
  const CorpusInstance s = strip(3);
  const SeparationFamily fam = family_from_cycles(s.graph, s.cycles.at("red"));
  const TreeDecomposition td = build_from_nested(s.graph, fam);

  TreeDecomposition missing = td;
  missing.bags[0].reset(s.graph.index(0));
  auto r = verify_td(s.graph, missing);
  EXPECT_FALSE(r.valid);
  EXPECT_FALSE(r.vertices_covered);

  TreeDecomposition trace = td;
  trace.bags[0].set(s.graph.index(24));
  r = verify_td(s.graph, trace);
  EXPECT_FALSE(r.valid);
  EXPECT_FALSE(r.traces_connected);
  EXPECT_FALSE(r.witness.empty());

  TreeDecomposition cut = td;
  for (int v : cycle_vertices(s.graph, s.cycles.at("red")[0]).indices()) cut.bags[1].reset(v);
  r = verify_td(s.graph, cut);
  EXPECT_FALSE(r.valid);
}

TEST(TreeDecomp, TorsoAddsAdhesionCliques) {
  const Graph p = path_graph(4);
  SeparationFamily fam = SeparationFamily::symmetric_closure({sep(p, {0}, {1, 2}, {3})});
  const TreeDecomposition td = build_from_nested(p, fam);
  ASSERT_EQ(td.num_nodes(), 2);
  const Graph t0 = torso(td, 0);
  EXPECT_EQ(t0.num_vertices(), 3);
  EXPECT_EQ(t0.num_edges(), 2);
  EXPECT_TRUE(torso_virtual_edges(td, 0).empty());
  const Graph c = cycle_graph(6);
  SeparationFamily cf = SeparationFamily::symmetric_closure({sep(c, {1, 2}, {0, 3}, {4, 5})});
  const TreeDecomposition ctd = build_from_nested(c, cf);
  for (int t = 0; t < ctd.num_nodes(); ++t) {
    EXPECT_EQ(torso_virtual_edges(ctd, t).size(), 1u);
    EXPECT_EQ(torso(ctd, t).num_edges(), 4);
  }
  EXPECT_EQ(adhesion_diameter_bound(ctd), 3);
  EXPECT_THROW(torso(ctd, 7), InputError);
}

TEST(TreeDecomp, RestrictedFamilyGeneratesOnEveryBlock) {
  const CorpusInstance s = fig1_interior();
  const auto emb = planar_embed(s.graph);
  std::vector<EdgeSet> fam;
  for (const auto& f : faces(*emb.embedding)) fam.push_back(f.edges);
  for (const auto& c : s.cycles.at("a-squares")) fam.push_back(c);
  const SeparationFamily sf = family_from_cycles(s.graph, fam);
  int blocks = 0;
  for (const auto& x : n_blocks(s.graph, sf)) {
    const RestrictedFamily rf = restrict_family(s.graph, fam, x);
    std::vector<std::vector<char>> rows;
    for (const auto& c : rf.cycles) {
      std::vector<char> row(static_cast<size_t>(rf.subgraph.num_edges()), 0);
      c.for_each([&](int e) { row[static_cast<size_t>(e)] = 1; });
      rows.push_back(row);
    }
    EXPECT_EQ(oracle::gf2_rank(rows), rf.subgraph.num_edges() - rf.subgraph.num_vertices() + 1);
    EXPECT_TRUE(rf.generation.generates);
    ++blocks;
  }
  EXPECT_GT(blocks, 1);
}

TEST(TreeDecomp, FattenGrowsBagsAndStaysValid) {
  const CorpusInstance s = strip(4);
  const TreeDecomposition td = build_from_nested(s.graph, family_from_cycles(s.graph, s.cycles.at("red")));
  const TreeDecomposition f = fatten(td, 1);
  EXPECT_TRUE(verify_td(s.graph, f).valid);
  for (int t = 0; t < td.num_nodes(); ++t) {
    EXPECT_TRUE(td.bags[static_cast<size_t>(t)].is_subset_of(f.bags[static_cast<size_t>(t)]));
    EXPECT_EQ(f.bags[static_cast<size_t>(t)], ball_around(s.graph, td.bags[static_cast<size_t>(t)], 1));
  }
  EXPECT_EQ(adhesion_diameter_bound(td), 2);
}

TEST(TreeDecomp, RefineSplitsANode) {
  // Two triangles glued along a path 2 - 3 - 4.
  const Graph g({0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
  const TreeDecomposition outer = trivial_decomposition(g);
  SeparationFamily fam = SeparationFamily::symmetric_closure({sep(g, {0, 1}, {2}, {3, 4, 5})});
  std::vector<std::optional<TreeDecomposition>> inner{build_from_nested(g, fam)};
  const TreeDecomposition r = refine(outer, inner);
  EXPECT_EQ(r.num_nodes(), 2);
  EXPECT_TRUE(verify_td(g, r).valid);
}

TEST(TreeDecomp, QuasiIsometryConstants) {
  const Graph p = path_graph(5);
  std::vector<int> id{0, 1, 2, 3, 4};
  const QiConstants c = fit_qi_constants(id, p, p);
  EXPECT_EQ(c.lambda, 1);
  EXPECT_EQ(c.epsilon, 0);
  EXPECT_EQ(c.c, 0);
  EXPECT_TRUE(qi_check(id, p, p, 1, 0, 0));
  // Collapse onto K1 is a quasi-isometry with additive error the diameter.
  const Graph k1 = Graph::with_vertices(1, {});
  std::vector<int> zero(5, 0);
  const QiConstants z = fit_qi_constants(zero, p, k1);
  EXPECT_EQ(z.epsilon, 4);
  EXPECT_TRUE(qi_check(zero, p, k1, 1, 4, 0));
  EXPECT_FALSE(qi_check(zero, p, k1, 1, 3, 0));
  EXPECT_THROW(qi_check(std::vector<int>{0, 1}, p, p, 1, 0, 0), InputError);
  const auto proj = nearest_projection(p, p.vertex_set_of(std::vector<VertexId>{0, 4}));
  EXPECT_EQ(proj, (std::vector<int>{0, 0, 0, 4, 4}));
}

TEST(TreeDecomp, StripConnectedPartsInequality) {
  const CorpusInstance s = strip(5);
  const TreeDecomposition td = build_from_nested(s.graph, family_from_cycles(s.graph, s.cycles.at("red")));
  const int k = adhesion_diameter_bound(td);
  const PartInequalityReport r = connected_parts_inequality(td, k);
  EXPECT_TRUE(r.holds) << r.witness;
  EXPECT_EQ(r.k, k);
  EXPECT_GT(r.pairs_checked, 0);
}

TEST(TreeDecomp, RandomNestedFamiliesProduceValidCanonicalTrees) {
  std::mt19937_64 rng(29);
  for (int it = 0; it < 40; ++it) {
    const Graph g = random_planar(8 + it % 20, 15, rng);
    const auto cycles = random_nested_cycles(g, 8, rng);
    const SeparationFamily fam = family_from_cycles(g, cycles);
    const TreeDecomposition td = build_from_nested(g, fam);
    const DecompositionReport r = verify_td(g, td);
    ASSERT_TRUE(r.valid) << r.witness;
    EXPECT_TRUE(is_connected(td.tree));
    EXPECT_EQ(td.tree.num_edges(), td.num_nodes() - 1);
    EXPECT_LE(r.adhesion, r.width + 1);
    // Bags are listed in set order; equal bags may repeat.
    for (int t = 1; t < td.num_nodes(); ++t) EXPECT_FALSE(td.bags[static_cast<size_t>(t)] < td.bags[static_cast<size_t>(t - 1)]);
  }
}

TEST(TreeDecomp, FacialCyclesOfTheCubeLeaveOneBlock) {
  const Graph q = cube_graph();
  const PlanarResult r = planar_structure_pipeline(q, automorphism_group(q).action);
  EXPECT_EQ(r.td.num_nodes(), 1);
  EXPECT_EQ(r.report.dropped_non_proper, 12);
  EXPECT_TRUE(r.kept.empty());
}

TEST(TreeDecomp, StripTorsosAddTheChordsOfTheRedCycles) {
  const CorpusInstance s = strip(5);
  const TreeDecomposition td = build_from_nested(s.graph, family_from_cycles(s.graph, s.cycles.at("red")));
  for (int t = 0; t < td.num_nodes(); ++t) {
    const Graph part = s.graph.induced(td.bags[static_cast<size_t>(t)]);
    const Graph tor = torso(td, t);
    const auto extra = torso_virtual_edges(td, t);
    EXPECT_EQ(extra.size(), 5u * static_cast<size_t>(td.tree.degree(t)));
    EXPECT_EQ(tor.num_edges(), part.num_edges() + static_cast<int>(extra.size()));
    for (int e = 0; e < part.num_edges(); ++e) {
      const auto [u, v] = part.edge_ids(e);
      EXPECT_TRUE(tor.adjacent(tor.index(u), tor.index(v)));
    }
    for (const auto& [u, v] : extra) EXPECT_EQ(bfs_from_index(s.graph, u)[static_cast<size_t>(v)], 2);
  }
}

TEST(TreeDecomp, BlocksOfAPath) {
  const Graph p({1, 2, 3}, {{1, 2}, {2, 3}});
  const SeparationFamily fam = SeparationFamily::symmetric_closure({sep(p, {1}, {2}, {3})});
  const auto blocks = n_blocks(p, fam);
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(p.ids_of(blocks[0]), (std::vector<VertexId>{1, 2}));
  EXPECT_EQ(p.ids_of(blocks[1]), (std::vector<VertexId>{2, 3}));
}
