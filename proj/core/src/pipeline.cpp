#include "nestree/pipeline.hpp"

#include <set>
#include <unordered_set>

#include "nestree/cyclespace.hpp"
#include "nestree/error.hpp"

namespace nestree {

PlanarResult planar_structure_pipeline(const Graph& g, const Action& a, const std::vector<EdgeSet>& extra) {
  if (g.num_vertices() == 0 || !is_connected(g)) throw InputError("graph is not connected");
  if (!(a.host == g)) throw InputError("action is over a different graph");
  const EmbedResult er = planar_embed(g);
  if (!er.embedding) throw InputError("graph is not planar");
  PlanarResult out{trivial_decomposition(g), {}, *er.embedding, {}, {}, {}, {}, {}};

  std::unordered_set<EdgeSet, IndexSetHash> seen;
  for (const auto& f : faces(out.embedding))
    if (f.is_cycle && seen.insert(f.edges).second) out.candidates.push_back(f.edges);
  for (size_t i = 0; i < extra.size(); ++i) {
    if (extra[i].universe() != g.num_edges() || !is_cycle(g, extra[i]))
      throw InputError("extra cycle " + std::to_string(i) + " is not a cycle of the graph");
    if (seen.insert(extra[i]).second) out.candidates.push_back(extra[i]);
  }

  std::vector<Separation> forward;
  int dropped = 0;
  for (int i = 0; i < static_cast<int>(out.candidates.size()); ++i) {
    const auto cs = separation_from_cycle(out.embedding, out.candidates[static_cast<size_t>(i)]);
    if (!cs.proper) {
      dropped += 2;
      continue;
    }
    out.kept.push_back(i);
    forward.push_back(cs.forward);
  }
  for (size_t i = 0; i < forward.size(); ++i)
    for (size_t j = i + 1; j < forward.size(); ++j)
      if (!sep_nested(forward[i], forward[j]))
        throw VerificationError("cycles " + std::to_string(out.kept[i]) + " and " + std::to_string(out.kept[j]) +
                                " give crossing separations");
  std::vector<EdgeSet> kept_cycles;
  for (int i : out.kept) kept_cycles.push_back(out.candidates[static_cast<size_t>(i)]);
  out.invariance = is_invariant(a, kept_cycles);
  if (!out.invariance.invariant)
    throw VerificationError(out.invariance.witness_map + " maps cycle " +
                            std::to_string(out.kept[static_cast<size_t>(out.invariance.witness_item)]) +
                            " outside the candidate family");
  out.family = SeparationFamily::symmetric_closure(forward);
  out.td = build_from_nested(g, out.family);
  const CertificateContext cert{out.embedding, out.candidates};
  out.report = verify_td(g, out.td, &cert);
  out.report.dropped_non_proper = dropped;
  if (vertex_connectivity(g) < 3) out.report.warnings.push_back("graph is not 3-connected; the embedding may not be unique");
  out.canonicity = canonicity_check(a, out.td);
  return out;
}

Action restrict_action(const Action& a, const VertexSet& x, const Graph& sub) {
  const Graph& g = a.host;
  std::vector<int> to_sub(static_cast<size_t>(g.num_vertices()), -1);
  x.for_each([&](int v) { to_sub[static_cast<size_t>(v)] = sub.index(g.id(v)); });
  Action out;
  out.host = sub;
  for (const auto& p : a.generators) {
    bool stable = true;
    x.for_each([&](int v) { stable = stable && x.test(p[static_cast<size_t>(v)]); });
    if (!stable) continue;
    Permutation q(static_cast<size_t>(sub.num_vertices()), -1);
    x.for_each([&](int v) { q[static_cast<size_t>(to_sub[static_cast<size_t>(v)])] = to_sub[static_cast<size_t>(p[static_cast<size_t>(v)])]; });
    if (is_automorphism(sub, q)) out.generators.push_back(std::move(q));
  }
  for (const auto& m : a.partial) {
    PartialMap q{std::vector<int>(static_cast<size_t>(sub.num_vertices()), -1)};
    x.for_each([&](int v) {
      const int w = m(v);
      if (w >= 0 && x.test(w)) q.image[static_cast<size_t>(to_sub[static_cast<size_t>(v)])] = to_sub[static_cast<size_t>(w)];
    });
    if (q.domain_size() > 0 && is_partial_automorphism(sub, q)) out.partial.push_back(std::move(q));
  }
  return out;
}

GeneralResult general_pipeline(const Graph& g, const Action& a) {
  if (!(a.host == g)) throw InputError("action is over a different graph");
  GeneralResult out;
  out.outer = tutte_decomposition(g);
  out.supergraph = adhesion_supergraph(g, out.outer);
  if (!out.supergraph.planar)
    throw VerificationError("adhesion supergraph is not planar (" + std::to_string(out.supergraph.witness_edges.size()) +
                            " Kuratowski edges)");
  std::vector<std::optional<TreeDecomposition>> inner(static_cast<size_t>(out.outer.num_nodes()));
  for (int t = 0; t < out.outer.num_nodes(); ++t) {
    const Graph tor = torso(out.outer, t);
    out.torso_classes.push_back(classify_torso(tor));
    if (out.torso_classes.back() != TorsoClass::kThreeConnected) {
      out.inner.emplace_back();
      continue;
    }
    const Action sub_action = restrict_action(a, out.outer.bags[static_cast<size_t>(t)], tor);
    PlanarResult pr = planar_structure_pipeline(tor, sub_action);
    inner[static_cast<size_t>(t)] = pr.td;
    out.inner.emplace_back(std::move(pr));
  }
  out.td = refine(out.outer, inner);
  out.report = verify_td(g, out.td);
  return out;
}

}  // namespace nestree
