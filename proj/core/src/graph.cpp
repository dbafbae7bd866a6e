#include "nestree/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

namespace nestree {

Graph::Graph(std::vector<VertexId> vertices, const std::vector<std::pair<VertexId, VertexId>>& edges)
    : ids_(std::move(vertices)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw InputError("duplicate vertex identifier");
  if (!ids_.empty() && ids_.front() < 0) throw InputError("vertex identifiers must be nonnegative");
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    const auto ia = find(a);
    const auto ib = find(b);
    if (!ia || !ib)
      throw InputError("edge {" + std::to_string(a) + "," + std::to_string(b) + "} uses an undeclared vertex");
    if (*ia == *ib) throw InputError("self-loop at vertex " + std::to_string(a));
    edges_.emplace_back(std::min(*ia, *ib), std::max(*ia, *ib));
  }
  build_adjacency();
}

Graph Graph::with_vertices(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<VertexId> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Graph(std::move(v), edges);
}

void Graph::build_adjacency() {
  const size_t n = ids_.size();
  std::vector<std::vector<std::pair<int, int>>> lists(n);
  for (size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    lists[static_cast<size_t>(u)].emplace_back(v, static_cast<int>(e));
    lists[static_cast<size_t>(v)].emplace_back(u, static_cast<int>(e));
  }
  offsets_.assign(n + 1, 0);
  adj_.clear();
  adj_edge_.clear();
  for (size_t v = 0; v < n; ++v) {
    auto& l = lists[v];
    std::sort(l.begin(), l.end());
    for (size_t i = 1; i < l.size(); ++i)
      if (l[i].first == l[i - 1].first)
        throw InputError("parallel edge between " + std::to_string(ids_[v]) + " and " +
                         std::to_string(ids_[static_cast<size_t>(l[i].first)]));
    for (const auto& [w, e] : l) {
      adj_.push_back(w);
      adj_edge_.push_back(e);
    }
    offsets_[v + 1] = static_cast<int>(adj_.size());
  }
}

std::optional<int> Graph::find(VertexId id) const {
  const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<int>(it - ids_.begin());
}

int Graph::index(VertexId id) const {
  const auto v = find(id);
  if (!v) throw InputError("unknown vertex identifier " + std::to_string(id));
  return *v;
}

std::span<const int> Graph::neighbors(int v) const {
  const auto b = static_cast<size_t>(offsets_[static_cast<size_t>(v)]);
  const auto e = static_cast<size_t>(offsets_[static_cast<size_t>(v) + 1]);
  return std::span<const int>(adj_).subspan(b, e - b);
}

std::span<const int> Graph::incident_edges(int v) const {
  const auto b = static_cast<size_t>(offsets_[static_cast<size_t>(v)]);
  const auto e = static_cast<size_t>(offsets_[static_cast<size_t>(v) + 1]);
  return std::span<const int>(adj_edge_).subspan(b, e - b);
}

std::optional<int> Graph::edge_index(int u, int v) const {
  const auto nb = neighbors(u);
  const auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return incident_edges(u)[static_cast<size_t>(it - nb.begin())];
}

VertexSet Graph::vertex_set_of(std::span<const VertexId> ids) const {
  VertexSet s(num_vertices());
  for (VertexId id : ids) s.set(index(id));
  return s;
}

std::vector<VertexId> Graph::ids_of(const VertexSet& s) const {
  std::vector<VertexId> out;
  s.for_each([&](int v) { out.push_back(id(v)); });
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<VertexId> vs = ids_of(keep);
  std::vector<std::pair<VertexId, VertexId>> es;
  for (const auto& [u, v] : edges_)
    if (keep.test(u) && keep.test(v)) es.emplace_back(id(u), id(v));
  return Graph(std::move(vs), es);
}

Graph Graph::with_added_edges(const std::vector<std::pair<int, int>>& extra) const {
  std::vector<std::pair<VertexId, VertexId>> es;
  es.reserve(edges_.size() + extra.size());
  for (const auto& [u, v] : edges_) es.emplace_back(id(u), id(v));
  std::vector<std::pair<int, int>> added;
  for (auto [u, v] : extra) {
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (adjacent(u, v)) continue;
    added.emplace_back(u, v);
  }
  std::sort(added.begin(), added.end());
  added.erase(std::unique(added.begin(), added.end()), added.end());
  for (const auto& [u, v] : added) es.emplace_back(id(u), id(v));
  return Graph(ids_, es);
}

std::vector<int> Graph::edge_map_from(const Graph& sub) const {
  std::vector<int> out(static_cast<size_t>(sub.num_edges()));
  for (int e = 0; e < sub.num_edges(); ++e) {
    const auto [a, b] = sub.edge_ids(e);
    const auto idx = edge_index(index(a), index(b));
    if (!idx) throw InputError("edge of subgraph missing from host");
    out[static_cast<size_t>(e)] = *idx;
  }
  return out;
}

std::vector<int> bfs_from_index(const Graph& g, int source) {
  VertexSet s(g.num_vertices());
  s.set(source);
  return bfs_from_set(g, s);
}

std::vector<int> bfs_from_set(const Graph& g, const VertexSet& sources) {
  std::vector<int> dist(static_cast<size_t>(g.num_vertices()), kUnreachable);
  std::deque<int> queue;
  sources.for_each([&](int v) {
    dist[static_cast<size_t>(v)] = 0;
    queue.push_back(v);
  });
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[static_cast<size_t>(w)] != kUnreachable) continue;
      dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::vector<int> distances(const Graph& g, VertexId source) {
  return bfs_from_index(g, g.index(source));
}

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(static_cast<size_t>(g.num_vertices())), d_(n_ * n_, kUnreachable) {
  for (int s = 0; s < g.num_vertices(); ++s) {
    const auto row = bfs_from_index(g, s);
    std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(static_cast<size_t>(s) * n_));
  }
}

bool is_connected(const Graph& g) { return count_components(g) <= 1; }

int count_components(const Graph& g) {
  return static_cast<int>(components_within(g, g.all_vertices()).size());
}

namespace {

// Connectivity of g minus `removed`, ignoring graphs with fewer than two
// remaining vertices.
bool disconnects(const Graph& g, const VertexSet& removed) {
  const int remaining = g.num_vertices() - removed.count();
  if (remaining < 2) return false;
  return components_outside(g, removed).size() > 1;
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[static_cast<size_t>(i)] < n - k + i) {
      ++c[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j) - 1] + 1;
      return true;
    }
  }
  return false;
}

// Maximum number of internally vertex-disjoint s-t paths, stopping at `cap`.
int disjoint_paths(const Graph& g, int s, int t, int cap) {
  // Vertex v splits into v_in = 2v and v_out = 2v+1 with unit capacity.
  const int n = g.num_vertices();
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(static_cast<size_t>(2 * n));
  auto add = [&](int a, int b, int c) {
    out[static_cast<size_t>(a)].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, c});
    out[static_cast<size_t>(b)].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0});
  };
  const int big = n + 1;
  for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  for (const auto& [u, v] : g.edges()) {
    add(2 * u + 1, 2 * v, big);
    add(2 * v + 1, 2 * u, big);
  }
  const int src = 2 * s + 1;
  const int dst = 2 * t;
  int flow = 0;
  std::vector<int> via(static_cast<size_t>(2 * n));
  while (flow < cap) {
    std::fill(via.begin(), via.end(), -1);
    std::deque<int> q{src};
    via[static_cast<size_t>(src)] = -2;
    while (!q.empty() && via[static_cast<size_t>(dst)] == -1) {
      const int x = q.front();
      q.pop_front();
      for (int a : out[static_cast<size_t>(x)]) {
        const Arc& arc = arcs[static_cast<size_t>(a)];
        if (arc.cap > 0 && via[static_cast<size_t>(arc.to)] == -1) {
          via[static_cast<size_t>(arc.to)] = a;
          q.push_back(arc.to);
        }
      }
    }
    if (via[static_cast<size_t>(dst)] == -1) break;
    for (int x = dst; x != src;) {
      const int a = via[static_cast<size_t>(x)];
      arcs[static_cast<size_t>(a)].cap -= 1;
      arcs[static_cast<size_t>(a ^ 1)].cap += 1;
      x = arcs[static_cast<size_t>(a ^ 1)].to;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int vertex_connectivity_exhaustive(const Graph& g) {
  const int n = g.num_vertices();
  if (n <= 1 || !is_connected(g)) return 0;
  for (int k = 0; k <= n - 2; ++k) {
    std::vector<int> c(static_cast<size_t>(k));
    std::iota(c.begin(), c.end(), 0);
    do {
      const VertexSet removed = VertexSet::from_indices(n, c);
      if (disconnects(g, removed)) return k;
    } while (next_combination(c, n));
  }
  return n - 1;
}

int vertex_connectivity_maxflow(const Graph& g) {
  const int n = g.num_vertices();
  if (n <= 1 || !is_connected(g)) return 0;
  int best = n - 1;
  for (int i = 0; i < n && i <= best; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) best = std::min(best, disjoint_paths(g, i, j, best));
  return best;
}

int vertex_connectivity(const Graph& g) {
  return g.num_vertices() <= 12 ? vertex_connectivity_exhaustive(g) : vertex_connectivity_maxflow(g);
}

VertexSet ball_around(const Graph& g, const VertexSet& s, int k) {
  const auto dist = bfs_from_set(g, s);
  VertexSet out(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    if (dist[static_cast<size_t>(v)] != kUnreachable && dist[static_cast<size_t>(v)] <= k) out.set(v);
  return out;
}

Graph ball(const Graph& g, VertexId center, int r) {
  if (r < 0) throw InputError("ball radius must be nonnegative");
  VertexSet c(g.num_vertices());
  c.set(g.index(center));
  return g.induced(ball_around(g, c, r));
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> comps;
  VertexSet seen(g.num_vertices());
  s.for_each([&](int root) {
    if (seen.test(root)) return;
    VertexSet comp(g.num_vertices());
    std::vector<int> stack{root};
    seen.set(root);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      comp.set(u);
      for (int w : g.neighbors(u)) {
        if (!s.test(w) || seen.test(w)) continue;
        seen.set(w);
        stack.push_back(w);
      }
    }
    comps.push_back(std::move(comp));
  });
  return comps;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out(g.num_vertices());
  s.for_each([&](int u) {
    for (int w : g.neighbors(u))
      if (!s.test(w)) out.set(w);
  });
  return out;
}

std::vector<OutsideComponent> components_outside(const Graph& g, const VertexSet& s) {
  std::vector<OutsideComponent> out;
  for (auto& comp : components_within(g, s.complement())) {
    VertexSet nb = neighborhood(g, comp);
    out.push_back({std::move(comp), std::move(nb)});
  }
  return out;
}

}  // namespace nestree
