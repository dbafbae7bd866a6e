#pragma once

#include <optional>
#include <vector>

#include "nestree/graph.hpp"
#include "nestree/planarity.hpp"
#include "nestree/separations.hpp"
#include "nestree/symmetry.hpp"
#include "nestree/treedecomp.hpp"
#include "nestree/tutte.hpp"

namespace nestree {

struct PlanarResult {
  TreeDecomposition td;
  DecompositionReport report;
  RotationSystem embedding;
  std::vector<EdgeSet> candidates;   // facial cycles, then extra cycles
  std::vector<int> kept;             // candidates with a proper separation
  SeparationFamily family;           // both orientations per kept cycle
  InvarianceReport invariance;
  CanonicityReport canonicity;
};

// Embeds g, takes facial cycles plus `extra` as candidates, keeps the proper
// ones, checks that they are nested (VerificationError naming the pair) and
// invariant under `a` (VerificationError naming map and cycle), builds the
// decomposition and verifies it with the facial-generation certificate.
// Throws InputError for disconnected or non-planar input.
PlanarResult planar_structure_pipeline(const Graph& g, const Action& a, const std::vector<EdgeSet>& extra = {});

// The action restricted to x: total generators stabilizing x setwise and
// partial maps cut down to x, re-expressed over sub = G[x] or a supergraph of
// it on the same vertices.
Action restrict_action(const Action& a, const VertexSet& x, const Graph& sub);

struct GeneralResult {
  TreeDecomposition outer;               // tutte_decomposition
  std::vector<TorsoClass> torso_classes; // per outer node
  Supergraph supergraph;
  std::vector<std::optional<PlanarResult>> inner;  // per three-connected torso
  TreeDecomposition td;                  // refined
  DecompositionReport report;
};

// Tutte decomposition, planarity of G+, planar_structure_pipeline on every
// three-connected torso, refinement. Throws VerificationError when G+ is not
// planar.
GeneralResult general_pipeline(const Graph& g, const Action& a);

}  // namespace nestree
