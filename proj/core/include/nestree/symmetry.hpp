#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nestree/graph.hpp"
#include "nestree/separations.hpp"
#include "nestree/treedecomp.hpp"
#include "nestree/vertex_map.hpp"

namespace nestree {

// A group acting on the host, given by generators. Partial maps come from
// Cayley balls and only act on their domain.
struct Action {
  Graph host;
  std::vector<Permutation> generators;
  std::vector<PartialMap> partial;
};

bool is_automorphism(const Graph& g, const Permutation& p);
// Injective, and preserves adjacency and non-adjacency between domain points.
bool is_partial_automorphism(const Graph& g, const PartialMap& m);
// Throws InputError naming the first offending generator.
void validate(const Action& a);

// One map of the action: total generators first, then each partial map and
// its inverse. An item is moved by a partial map only when the item and its
// image both lie in the map's domain.
struct ActionMap {
  std::vector<int> image;  // -1 outside the domain
  VertexSet domain;
  bool total = false;
  std::string name;  // "g<i>", "p<i>" or "p<i>^-1"
};

std::vector<ActionMap> action_maps(const Action& a);

std::optional<VertexSet> apply(const ActionMap& m, const VertexSet& s);
std::optional<int> apply_edge(const Graph& g, const ActionMap& m, int e);
std::optional<EdgeSet> apply(const Graph& g, const ActionMap& m, const EdgeSet& c);
// Partial maps never move a separation: its sides cover V.
std::optional<Separation> apply(const ActionMap& m, const Separation& s);

struct AutomorphismOptions {
  int max_vertices = 40;
  long node_budget = 20'000'000;
};

struct AutomorphismGroup {
  Action action;                 // strong generators, no partial maps
  std::string order;             // decimal
  std::vector<int> base;         // base points with nontrivial basic orbit
  std::vector<int> orbit_sizes;  // basic orbit sizes along base
};

// Throws BudgetExceeded above opts.max_vertices or when the search visits
// more than opts.node_budget nodes.
AutomorphismGroup automorphism_group(const Graph& g, const AutomorphismOptions& opts = {});

// Vertex-index bijection a -> b preserving adjacency, if one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b, const AutomorphismOptions& opts = {});

// Orbit partitions. Each class is sorted; classes are ordered by their first
// member. For item lists an image outside the list is ignored.
std::vector<std::vector<int>> vertex_orbits(const Action& a);
std::vector<std::vector<int>> edge_orbits(const Action& a);
std::vector<std::vector<int>> cycle_orbits(const Action& a, const std::vector<EdgeSet>& cycles);
std::vector<std::vector<int>> separation_orbits(const Action& a, const std::vector<Separation>& seps);

struct InvarianceReport {
  bool invariant = true;
  int checked = 0;           // (map, item) pairs checked
  int skipped_boundary = 0;  // partial-map pairs left out
  std::string witness;       // "<map> moves member <i> out of the family"
  std::string witness_map;
  int witness_item = -1;
  int orbit_count = 0;
};

InvarianceReport is_invariant(const Action& a, const std::vector<EdgeSet>& cycles);
InvarianceReport is_invariant(const Action& a, const SeparationFamily& fam);

struct CanonicityReport {
  bool canonical = true;
  int edge_orbit_count = 0;
  int bag_orbit_count = 0;
  int checked_nodes = 0;
  int skipped_nodes = 0;  // partial-map nodes left out
  std::string witness;
  std::string witness_map;
  int witness_node = -1;
  // Per map: the induced node map (-1 where unchecked).
  std::vector<std::vector<int>> tree_maps;
};

// Every map must send bags to bags through a tree automorphism; duplicate
// bags are resolved by backtracking. Throws InputError for a foreign host.
CanonicityReport canonicity_check(const Action& a, const TreeDecomposition& td);

}  // namespace nestree
