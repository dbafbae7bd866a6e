#pragma once

#include <optional>
#include <vector>

#include "nestree/graph.hpp"

namespace nestree {

// Combinatorial sphere embedding: for every vertex the cyclic order of its
// incident edges. A dart is 2*e for edge e traversed from its smaller index
// endpoint, 2*e+1 for the reverse direction.
class RotationSystem {
 public:
  RotationSystem() = default;
  // Throws InputError unless every rotation lists exactly the incident edges.
  RotationSystem(Graph g, std::vector<std::vector<int>> rotation);

  const Graph& graph() const { return graph_; }
  const std::vector<int>& rotation(int v) const { return rotation_[static_cast<size_t>(v)]; }
  const std::vector<std::vector<int>>& rotations() const { return rotation_; }

  // Edge after e in the rotation at v.
  int next_edge(int v, int e) const;
  int prev_edge(int v, int e) const;

  static int dart_tail(const Graph& g, int d) {
    const auto [a, b] = g.edge(d / 2);
    return d % 2 == 0 ? a : b;
  }
  static int dart_head(const Graph& g, int d) {
    const auto [a, b] = g.edge(d / 2);
    return d % 2 == 0 ? b : a;
  }
  // Dart following d along its face: from head(d) leave by the edge after e.
  int next_dart(int d) const;

  // Same graph, every rotation reversed.
  RotationSystem mirror() const;
  // Embedding of g[keep] inherited from this one; edges of the result follow
  // Graph::induced numbering.
  RotationSystem restrict_to(const VertexSet& keep) const;

 private:
  Graph graph_;
  std::vector<std::vector<int>> rotation_;
  std::vector<std::vector<int>> position_;  // position_[v][i]: slot of incident_edges(v)[i]
};

struct FaceWalk {
  std::vector<int> darts;
  std::vector<int> vertices;  // tails of the darts, in walk order
  EdgeSet edges;              // edges traversed an odd number of times
  bool is_cycle = false;      // the walk is a simple closed cycle
};

// Facial walks. Every dart lies on exactly one walk; an isolated vertex
// contributes one empty walk. Walks start at their smallest dart and are
// ordered by it.
std::vector<FaceWalk> faces(const RotationSystem& e);

struct EmbedResult {
  std::optional<RotationSystem> embedding;
  // For non-planar input: edge indices of a minimal non-planar subgraph
  // (a Kuratowski subdivision).
  std::vector<int> witness_edges;
  bool planar() const { return embedding.has_value(); }
};

// Left-right planarity test with deterministic DFS order. The embedding is
// checked against Euler's relation per component; a mismatch raises
// InternalError.
EmbedResult planar_embed(const Graph& g);
bool is_planar(const Graph& g);

struct SidePair {
  VertexSet side_a;
  VertexSet side_b;
};

// Vertex sets of the two regions of the sphere bounded by c. side_a is the
// smaller set under VertexSet ordering, so an empty side is always side_b.
// Throws InputError if c is not a cycle or the graph is disconnected.
SidePair cycle_sides(const RotationSystem& e, const EdgeSet& c);

// True iff c2 does not meet both open regions of c1.
bool cycles_nested(const RotationSystem& e, const EdgeSet& c1, const EdgeSet& c2);

bool is_facial(const RotationSystem& e, const EdgeSet& c);
bool is_facial(const std::vector<FaceWalk>& fs, const EdgeSet& c);

struct CertificateReport {
  bool ok = false;
  bool all_cycles = true;
  bool all_facial = true;
  int first_non_facial = -1;
  int rank = 0;
  int dimension = 0;
};

// Every member is a facial cycle and the family generates the cycle space.
CertificateReport facial_generation_report(const RotationSystem& e, const std::vector<EdgeSet>& fam);
bool facial_generation_certificate(const RotationSystem& e, const std::vector<EdgeSet>& fam);

// Face chosen as outer face for plane drawings: longest walk, ties broken by
// the smallest vertex identifier on the walk.
int export_outer_face(const RotationSystem& e, const std::vector<FaceWalk>& fs);

}  // namespace nestree
