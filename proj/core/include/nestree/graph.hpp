#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nestree/index_set.hpp"

namespace nestree {

// External vertex identifier. Internally every vertex is addressed by its
// index in ascending identifier order, so index order and id order agree.
using VertexId = int;

inline constexpr int kUnreachable = -1;

// Finite simple undirected graph. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Throws InputError on self-loops, parallel edges, duplicate or negative
  // identifiers, and edges whose endpoints are not declared vertices. Edge
  // indices follow the order of `edges`.
  Graph(std::vector<VertexId> vertices, const std::vector<std::pair<VertexId, VertexId>>& edges);

  // Convenience: vertices are 0..n-1.
  static Graph with_vertices(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

  int num_vertices() const { return static_cast<int>(ids_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<VertexId>& ids() const { return ids_; }
  VertexId id(int v) const { return ids_[static_cast<size_t>(v)]; }
  std::optional<int> find(VertexId id) const;
  // Throws InputError for an unknown identifier.
  int index(VertexId id) const;

  // Endpoint indices of edge e, first < second.
  std::pair<int, int> edge(int e) const { return edges_[static_cast<size_t>(e)]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::pair<VertexId, VertexId> edge_ids(int e) const {
    return {id(edges_[static_cast<size_t>(e)].first), id(edges_[static_cast<size_t>(e)].second)};
  }

  // Sorted neighbor indices of v; incident_edges(v)[i] joins v to neighbors(v)[i].
  std::span<const int> neighbors(int v) const;
  std::span<const int> incident_edges(int v) const;
  int degree(int v) const { return offsets_[static_cast<size_t>(v) + 1] - offsets_[static_cast<size_t>(v)]; }

  std::optional<int> edge_index(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_index(u, v).has_value(); }

  VertexSet empty_vertex_set() const { return VertexSet(num_vertices()); }
  VertexSet all_vertices() const { return VertexSet::full(num_vertices()); }
  EdgeSet empty_edge_set() const { return EdgeSet(num_edges()); }

  VertexSet vertex_set_of(std::span<const VertexId> ids) const;
  std::vector<VertexId> ids_of(const VertexSet& s) const;

  // Induced subgraph on `keep`, identifiers preserved, edges in ascending
  // host edge order.
  Graph induced(const VertexSet& keep) const;

  // Same vertex set with additional edges (given by index pairs); existing
  // pairs are ignored.
  Graph with_added_edges(const std::vector<std::pair<int, int>>& extra) const;

  // Maps each edge of `sub` (whose ids are a subset of this graph's) to the
  // corresponding edge index here. Throws InputError if some edge is absent.
  std::vector<int> edge_map_from(const Graph& sub) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.ids_ == b.ids_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency();

  std::vector<VertexId> ids_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> offsets_{0};
  std::vector<int> adj_;
  std::vector<int> adj_edge_;
};

// BFS distances from the vertex with identifier `source`, indexed by vertex
// index; kUnreachable for other components.
std::vector<int> distances(const Graph& g, VertexId source);
std::vector<int> bfs_from_index(const Graph& g, int source);
// Multi-source BFS: distance to the nearest member of `sources`.
std::vector<int> bfs_from_set(const Graph& g, const VertexSet& sources);

// Dense all-pairs distance table.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);
  int operator()(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + static_cast<size_t>(v)]; }
  int size() const { return static_cast<int>(n_); }

 private:
  size_t n_;
  std::vector<int> d_;
};

bool is_connected(const Graph& g);
int count_components(const Graph& g);

// Minimum vertex cut size; 0 when disconnected, |V|-1 for complete graphs.
// Dispatches to the exhaustive path for |V| <= 12 and to max-flow above.
int vertex_connectivity(const Graph& g);
int vertex_connectivity_exhaustive(const Graph& g);
int vertex_connectivity_maxflow(const Graph& g);

// Induced subgraph on all vertices within distance r of `center`.
Graph ball(const Graph& g, VertexId center, int r);
// Vertices within distance k of some member of `s`.
VertexSet ball_around(const Graph& g, const VertexSet& s, int k);

struct OutsideComponent {
  VertexSet vertices;
  VertexSet neighborhood;  // N_G(vertices), a subset of the removed set
};

// Components of g - s, ordered by their smallest vertex.
std::vector<OutsideComponent> components_outside(const Graph& g, const VertexSet& s);

// Components of the induced subgraph g[s], ordered by smallest vertex.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s);

// Open neighborhood of s.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

}  // namespace nestree
