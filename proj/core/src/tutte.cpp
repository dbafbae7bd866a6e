#include "nestree/tutte.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "nestree/error.hpp"
#include "nestree/planarity.hpp"

namespace nestree {

const char* to_string(TorsoClass c) {
  switch (c) {
    case TorsoClass::kCompleteAtMostTwo:
      return "complete-of-order-at-most-2";
    case TorsoClass::kCycle:
      return "cycle";
    case TorsoClass::kThreeConnected:
      return "three-connected";
  }
  return "?";
}

namespace {

bool is_cycle_graph(const Graph& g) {
  if (g.num_vertices() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

}  // namespace

TorsoClass classify_torso(const Graph& g) {
  const int n = g.num_vertices();
  if (n <= 2 && g.num_edges() == n * (n - 1) / 2) return TorsoClass::kCompleteAtMostTwo;
  if (is_cycle_graph(g)) return TorsoClass::kCycle;
  if (n >= 4 && vertex_connectivity(g) >= 3) return TorsoClass::kThreeConnected;
  throw InternalError("torso with " + std::to_string(n) + " vertices and " + std::to_string(g.num_edges()) +
                      " edges fits no torso class");
}

namespace {

struct PEdge {
  int u;
  int v;
  int virt;  // -1 for a real edge
};

enum class PieceType { kBond, kPolygon, kRigid };

struct Piece {
  std::vector<PEdge> edges;
  PieceType type = PieceType::kBond;

  std::vector<int> vertices() const {
    std::set<int> s;
    for (const auto& e : edges) {
      s.insert(e.u);
      s.insert(e.v);
    }
    return {s.begin(), s.end()};
  }
};

Graph simple_graph(const Graph& host, const Piece& p) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : p.edges) pairs.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
  std::vector<VertexId> ids;
  for (int v : p.vertices()) ids.push_back(host.id(v));
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& [u, v] : pairs) edges.emplace_back(host.id(u), host.id(v));
  return Graph(ids, edges);
}

int uf_find(std::vector<int>& p, int x) {
  while (p[static_cast<size_t>(x)] != x) {
    p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
    x = p[static_cast<size_t>(x)];
  }
  return x;
}

// Separation classes of the pair {a,b}: edges joined through other vertices.
std::vector<std::vector<int>> separation_classes(const Piece& p, int a, int b) {
  const int m = static_cast<int>(p.edges.size());
  std::vector<int> parent(static_cast<size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  std::map<int, int> first_at;
  for (int i = 0; i < m; ++i)
    for (int x : {p.edges[static_cast<size_t>(i)].u, p.edges[static_cast<size_t>(i)].v}) {
      if (x == a || x == b) continue;
      const auto [it, fresh] = first_at.emplace(x, i);
      if (!fresh) {
        const int r1 = uf_find(parent, it->second);
        const int r2 = uf_find(parent, i);
        if (r1 != r2) parent[static_cast<size_t>(std::max(r1, r2))] = std::min(r1, r2);
      }
    }
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < m; ++i) by_root[uf_find(parent, i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [r, cls] : by_root) out.push_back(std::move(cls));
  return out;
}

// Splits a 2-connected block into bonds, polygons and rigid pieces, then
// merges adjacent bonds and adjacent polygons.
std::vector<Piece> triconnected_pieces(const Graph& host, const std::vector<int>& block_edges) {
  Piece start;
  for (int e : block_edges) start.edges.push_back({host.edge(e).first, host.edge(e).second, -1});
  int next_virtual = 0;
  std::vector<Piece> done;
  std::vector<Piece> work{start};
  while (!work.empty()) {
    Piece p = std::move(work.back());
    work.pop_back();
    const auto verts = p.vertices();
    if (verts.size() == 2) {
      p.type = PieceType::kBond;
      done.push_back(std::move(p));
      continue;
    }
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (int i = 0; i < static_cast<int>(p.edges.size()); ++i) {
      const auto& e = p.edges[static_cast<size_t>(i)];
      groups[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(i);
    }
    bool split_bond = false;
    for (const auto& [pair, idx] : groups) {
      if (idx.size() < 2) continue;
      const int vid = next_virtual++;
      Piece bond;
      bond.type = PieceType::kBond;
      Piece rest;
      std::set<int> in_bond(idx.begin(), idx.end());
      for (int i = 0; i < static_cast<int>(p.edges.size()); ++i)
        (in_bond.count(i) ? bond : rest).edges.push_back(p.edges[static_cast<size_t>(i)]);
      bond.edges.push_back({pair.first, pair.second, vid});
      rest.edges.push_back({pair.first, pair.second, vid});
      done.push_back(std::move(bond));
      work.push_back(std::move(rest));
      split_bond = true;
      break;
    }
    if (split_bond) continue;
    const Graph sg = simple_graph(host, p);
    if (is_cycle_graph(sg)) {
      p.type = PieceType::kPolygon;
      done.push_back(std::move(p));
      continue;
    }
    if (sg.num_vertices() >= 4 && vertex_connectivity(sg) >= 3) {
      p.type = PieceType::kRigid;
      done.push_back(std::move(p));
      continue;
    }
    bool split = false;
    for (size_t i = 0; i < verts.size() && !split; ++i)
      for (size_t j = i + 1; j < verts.size() && !split; ++j) {
        const int a = verts[i];
        const int b = verts[j];
        const auto cls = separation_classes(p, a, b);
        if (cls.size() < 2) continue;
        if (cls.size() == 2 && (cls[0].size() == 1 || cls[1].size() == 1)) continue;
        const auto pick = std::find_if(cls.begin(), cls.end(), [](const std::vector<int>& c) { return c.size() >= 2; });
        const int vid = next_virtual++;
        Piece one;
        Piece other;
        std::set<int> chosen(pick->begin(), pick->end());
        for (int k = 0; k < static_cast<int>(p.edges.size()); ++k)
          (chosen.count(k) ? one : other).edges.push_back(p.edges[static_cast<size_t>(k)]);
        one.edges.push_back({a, b, vid});
        other.edges.push_back({a, b, vid});
        work.push_back(std::move(other));
        work.push_back(std::move(one));
        split = true;
      }
    if (!split) throw InternalError("block piece without separation pair is neither a cycle nor 3-connected");
  }

  // Merge bond-bond and polygon-polygon neighbours along a shared virtual edge.
  bool merged = true;
  while (merged) {
    merged = false;
    std::map<int, std::vector<int>> holders;
    for (int i = 0; i < static_cast<int>(done.size()); ++i)
      for (const auto& e : done[static_cast<size_t>(i)].edges)
        if (e.virt >= 0) holders[e.virt].push_back(i);
    for (const auto& [vid, hs] : holders) {
      if (hs.size() != 2) throw InternalError("virtual edge not shared by exactly two pieces");
      Piece& x = done[static_cast<size_t>(hs[0])];
      Piece& y = done[static_cast<size_t>(hs[1])];
      if (x.type != y.type || x.type == PieceType::kRigid) continue;
      Piece z;
      z.type = x.type;
      for (const Piece* q : {&x, &y})
        for (const auto& e : q->edges)
          if (e.virt != vid) z.edges.push_back(e);
      const int keep = hs[0];
      const int drop = hs[1];
      done[static_cast<size_t>(keep)] = std::move(z);
      done.erase(done.begin() + drop);
      merged = true;
      break;
    }
  }
  return done;
}

// Edge sets of the blocks (maximal 2-connected subgraphs and bridges).
std::vector<std::vector<int>> blocks_of(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> disc(static_cast<size_t>(n), -1);
  std::vector<int> low(static_cast<size_t>(n), 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> out;
  int timer = 0;
  auto dfs = [&](auto&& self, int u, int parent_edge) -> void {
    disc[static_cast<size_t>(u)] = low[static_cast<size_t>(u)] = timer++;
    const auto nb = g.neighbors(u);
    const auto ie = g.incident_edges(u);
    for (size_t i = 0; i < nb.size(); ++i) {
      const int w = nb[i];
      const int e = ie[i];
      if (e == parent_edge) continue;
      if (disc[static_cast<size_t>(w)] < 0) {
        stack.push_back(e);
        self(self, w, e);
        low[static_cast<size_t>(u)] = std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(w)]);
        if (low[static_cast<size_t>(w)] >= disc[static_cast<size_t>(u)]) {
          std::vector<int> blk;
          while (true) {
            const int f = stack.back();
            stack.pop_back();
            blk.push_back(f);
            if (f == e) break;
          }
          std::sort(blk.begin(), blk.end());
          out.push_back(std::move(blk));
        }
      } else if (disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(u)]) {
        stack.push_back(e);
        low[static_cast<size_t>(u)] = std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(w)]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[static_cast<size_t>(v)] < 0) dfs(dfs, v, -1);
  std::sort(out.begin(), out.end());
  return out;
}

struct LocalTree {
  std::vector<VertexSet> bags;
  std::vector<NodeKind> kind;
  std::vector<std::pair<int, int>> edges;
};

LocalTree block_tree(const Graph& g, const std::vector<int>& block_edges) {
  LocalTree lt;
  const int n = g.num_vertices();
  if (block_edges.size() == 1) {
    const auto [u, v] = g.edge(block_edges[0]);
    lt.bags.push_back(VertexSet::from_indices(n, std::vector<int>{u, v}));
    lt.kind.push_back(NodeKind::kBlock);
    return lt;
  }
  const auto pieces = triconnected_pieces(g, block_edges);
  std::map<int, std::vector<int>> holders;
  for (int i = 0; i < static_cast<int>(pieces.size()); ++i) {
    lt.bags.push_back(VertexSet::from_indices(n, pieces[static_cast<size_t>(i)].vertices()));
    lt.kind.push_back(pieces[static_cast<size_t>(i)].type == PieceType::kBond ? NodeKind::kHub : NodeKind::kBlock);
    for (const auto& e : pieces[static_cast<size_t>(i)].edges)
      if (e.virt >= 0) holders[e.virt].push_back(i);
  }
  for (const auto& [vid, hs] : holders) lt.edges.emplace_back(std::min(hs[0], hs[1]), std::max(hs[0], hs[1]));
  return lt;
}

// Center of the subtree induced by `nodes`: one node, or the two ends of the
// central edge.
std::vector<int> subtree_center(const LocalTree& lt, const std::vector<int>& nodes) {
  std::set<int> alive(nodes.begin(), nodes.end());
  auto degree = [&](int x) {
    int d = 0;
    for (const auto& [a, b] : lt.edges)
      if ((a == x && alive.count(b)) || (b == x && alive.count(a))) ++d;
    return d;
  };
  while (alive.size() > 2) {
    std::vector<int> leaves;
    for (int x : alive)
      if (degree(x) <= 1) leaves.push_back(x);
    for (int x : leaves) alive.erase(x);
  }
  return {alive.begin(), alive.end()};
}

}  // namespace

TreeDecomposition tutte_decomposition(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) throw InputError("graph has no vertices");
  if (!is_connected(g)) throw InputError("graph is not connected");
  if (n == 1) return trivial_decomposition(g);

  std::vector<VertexSet> bags;
  std::vector<NodeKind> kind;
  std::vector<std::pair<int, int>> edges;
  const auto blocks = blocks_of(g);
  std::vector<std::vector<int>> blocks_at(static_cast<size_t>(n));
  std::vector<LocalTree> trees;
  std::vector<int> offset;
  for (int bi = 0; bi < static_cast<int>(blocks.size()); ++bi) {
    trees.push_back(block_tree(g, blocks[static_cast<size_t>(bi)]));
    std::set<int> vs;
    for (int e : blocks[static_cast<size_t>(bi)]) {
      vs.insert(g.edge(e).first);
      vs.insert(g.edge(e).second);
    }
    for (int v : vs) blocks_at[static_cast<size_t>(v)].push_back(bi);
  }

  // Attachment node per (cut vertex, block); central edges get a hub bag
  // equal to their adhesion set.
  std::map<std::pair<int, int>, int> attach;
  for (int v = 0; v < n; ++v) {
    if (blocks_at[static_cast<size_t>(v)].size() < 2) continue;
    for (int bi : blocks_at[static_cast<size_t>(v)]) {
      LocalTree& lt = trees[static_cast<size_t>(bi)];
      std::vector<int> holding;
      for (int i = 0; i < static_cast<int>(lt.bags.size()); ++i)
        if (lt.bags[static_cast<size_t>(i)].test(v)) holding.push_back(i);
      const auto c = subtree_center(lt, holding);
      if (c.size() == 1) {
        attach[{v, bi}] = c[0];
        continue;
      }
      const std::pair<int, int> ce{std::min(c[0], c[1]), std::max(c[0], c[1])};
      const VertexSet adh = lt.bags[static_cast<size_t>(ce.first)] & lt.bags[static_cast<size_t>(ce.second)];
      int h = -1;
      for (int i = 0; i < static_cast<int>(lt.bags.size()); ++i)
        if (lt.bags[static_cast<size_t>(i)] == adh && lt.kind[static_cast<size_t>(i)] == NodeKind::kHub) h = i;
      if (h < 0) {
        h = static_cast<int>(lt.bags.size());
        lt.bags.push_back(adh);
        lt.kind.push_back(NodeKind::kHub);
        const auto it = std::find(lt.edges.begin(), lt.edges.end(), ce);
        if (it == lt.edges.end()) throw InternalError("central edge missing from block tree");
        lt.edges.erase(it);
        lt.edges.emplace_back(ce.first, h);
        lt.edges.emplace_back(ce.second, h);
      }
      attach[{v, bi}] = h;
    }
  }
  for (const auto& lt : trees) {
    const int base = static_cast<int>(bags.size());
    offset.push_back(base);
    bags.insert(bags.end(), lt.bags.begin(), lt.bags.end());
    kind.insert(kind.end(), lt.kind.begin(), lt.kind.end());
    for (const auto& [a, b] : lt.edges) edges.emplace_back(base + a, base + b);
  }
  for (int v = 0; v < n; ++v) {
    if (blocks_at[static_cast<size_t>(v)].size() < 2) continue;
    const int hub = static_cast<int>(bags.size());
    bags.push_back(VertexSet::from_indices(n, std::vector<int>{v}));
    kind.push_back(NodeKind::kHub);
    for (int bi : blocks_at[static_cast<size_t>(v)])
      edges.emplace_back(offset[static_cast<size_t>(bi)] + attach.at({v, bi}), hub);
  }

  // Renumber nodes by bag order.
  std::vector<int> perm(bags.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (!(bags[static_cast<size_t>(a)] == bags[static_cast<size_t>(b)])) return bags[static_cast<size_t>(a)] < bags[static_cast<size_t>(b)];
    return a < b;
  });
  std::vector<int> where(bags.size());
  for (size_t i = 0; i < perm.size(); ++i) where[static_cast<size_t>(perm[i])] = static_cast<int>(i);
  TreeDecomposition td;
  td.host = g;
  for (int p : perm) {
    td.bags.push_back(bags[static_cast<size_t>(p)]);
    td.kind.push_back(kind[static_cast<size_t>(p)]);
  }
  std::vector<std::pair<int, int>> tree_edges;
  for (const auto& [a, b] : edges) {
    const int x = where[static_cast<size_t>(a)];
    const int y = where[static_cast<size_t>(b)];
    tree_edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(tree_edges.begin(), tree_edges.end());
  td.tree = Graph::with_vertices(static_cast<int>(td.bags.size()), tree_edges);
  return td;
}

Supergraph adhesion_supergraph(const Graph& g, const TreeDecomposition& td) {
  if (!(td.host == g)) throw InputError("decomposition is over a different graph");
  std::set<std::pair<int, int>> extra;
  for (int e = 0; e < td.tree.num_edges(); ++e) {
    const auto a = td.adhesion_set(e).indices();
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = i + 1; j < a.size(); ++j)
        if (!g.adjacent(a[i], a[j])) extra.emplace(a[i], a[j]);
  }
  Supergraph out;
  out.added.assign(extra.begin(), extra.end());
  out.graph = g.with_added_edges(out.added);
  const EmbedResult er = planar_embed(out.graph);
  out.planar = er.embedding.has_value();
  out.witness_edges = er.witness_edges;
  return out;
}

}  // namespace nestree
