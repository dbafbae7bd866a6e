#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nestree/cyclespace.hpp"
#include "nestree/graph.hpp"
#include "nestree/planarity.hpp"
#include "nestree/separations.hpp"

namespace nestree {

enum class NodeKind { kBlock, kHub };

const char* to_string(NodeKind k);

// Tree of bags over a host graph. Tree vertices are 0..t-1 and tree edge i
// joins tree.edge(i).first < tree.edge(i).second.
struct TreeDecomposition {
  Graph host;
  Graph tree;
  std::vector<VertexSet> bags;
  std::vector<NodeKind> kind;

  int num_nodes() const { return tree.num_vertices(); }
  VertexSet adhesion_set(int tree_edge) const {
    const auto [a, b] = tree.edge(tree_edge);
    return bags[static_cast<size_t>(a)] & bags[static_cast<size_t>(b)];
  }
  std::optional<int> find_bag(const VertexSet& b) const;
};

// Single node holding every vertex.
TreeDecomposition trivial_decomposition(const Graph& g);

// Oriented edge-separations: entry 2i is tree edge i read from its first
// endpoint towards its second, (U1 - U2, U1 n U2, U2 - U1) with U_j the union
// of the bags on the side of endpoint j; entry 2i+1 is its flip.
std::vector<Separation> edge_separations(const TreeDecomposition& td);

// Maximal vertex sets not split by any member: X avoids Y or avoids Z for
// every (Y,S,Z). Throws VerificationError naming a crossing pair when the
// family is not nested. Sorted by VertexSet order.
std::vector<VertexSet> n_blocks(const Graph& g, const SeparationFamily& fam);

struct BuildReport {
  int dropped_non_proper = 0;
  int input_size = 0;  // after dropping, both orientations
  std::vector<int> edge_of_separation;  // family index -> oriented edge-separation slot
};

// Tree whose oriented edges are exactly the members of the symmetric nested
// family (non-proper members are dropped first and counted). Throws
// VerificationError with the offending member or pair otherwise. The
// bijection, the axioms and the hub/block typology are re-checked on the
// result; a failed re-check raises InternalError.
TreeDecomposition build_from_nested(const Graph& g, const SeparationFamily& fam, BuildReport* report = nullptr);

// Optional data for the facial-generation certificate of block parts.
struct CertificateContext {
  RotationSystem embedding;
  std::vector<EdgeSet> cycles;  // the generating family, over the host
};

struct PartReport {
  int node = 0;
  int size = 0;
  bool connected = false;
  bool two_connected = false;
  std::optional<bool> certificate;
  int ends_proxy = 0;
};

struct DecompositionReport {
  bool valid = false;  // all three axioms
  bool vertices_covered = false;
  bool edges_covered = false;
  bool traces_connected = false;
  bool tree_ok = false;
  std::string witness;  // first failing check
  int width = -1;
  int adhesion = 0;
  bool parts_connected = false;
  bool parts_two_connected = false;
  std::optional<bool> certificate_ok;
  int dropped_non_proper = 0;
  std::vector<std::string> warnings;
  std::vector<PartReport> parts;
};

DecompositionReport verify_td(const Graph& g, const TreeDecomposition& td,
                              const CertificateContext* cert = nullptr);

// G[X] for a vertex set containing at least 3 vertices without cut vertex.
bool is_two_connected(const Graph& g);

// G[V_t] plus a clique on every adhesion set at t. Throws InputError for an
// unknown node.
Graph torso(const TreeDecomposition& td, int t);
// The added pairs (host indices) of torso(td, t) missing from the host.
std::vector<std::pair<int, int>> torso_virtual_edges(const TreeDecomposition& td, int t);

struct RestrictedFamily {
  std::vector<int> members;      // indices into the input family
  Graph subgraph;                // G[X]
  std::vector<EdgeSet> cycles;   // members over the subgraph's edge indices
  GenerationReport generation;   // against the cycle space of G[X]
};

RestrictedFamily restrict_family(const Graph& g, const std::vector<EdgeSet>& fam, const VertexSet& x);

// Every bag replaced by its radius-k ball.
TreeDecomposition fatten(const TreeDecomposition& td, int k);

// max d_G(u,v) over torso edges uv that are not edges of G; 0 when no torso
// gains an edge.
int adhesion_diameter_bound(const TreeDecomposition& td);

// Per outer node the decomposition of torso(outer, t); nodes without an entry
// stay single. Throws InputError when an outer adhesion set lies in no inner
// bag.
TreeDecomposition refine(const TreeDecomposition& outer, const std::vector<std::optional<TreeDecomposition>>& inner);

}  // namespace nestree
