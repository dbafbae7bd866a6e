#pragma once

#include <utility>
#include <vector>

#include "nestree/graph.hpp"
#include "nestree/treedecomp.hpp"

namespace nestree {

enum class TorsoClass { kCompleteAtMostTwo, kCycle, kThreeConnected };

const char* to_string(TorsoClass c);

// Throws InternalError when no class applies.
TorsoClass classify_torso(const Graph& g);

// Canonical decomposition of adhesion at most 2: cut vertices become hubs
// {v}, every block is split into cycles, bonds and 3-connected pieces
// (bonds become hubs {a,b}). Throws InputError for disconnected input.
TreeDecomposition tutte_decomposition(const Graph& g);

struct Supergraph {
  Graph graph;                              // G plus every adhesion pair
  std::vector<std::pair<int, int>> added;   // index pairs new to G
  bool planar = false;
  std::vector<int> witness_edges;           // Kuratowski edges of graph when not planar
};

Supergraph adhesion_supergraph(const Graph& g, const TreeDecomposition& td);

}  // namespace nestree
