#include "nestree/treedecomp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "nestree/error.hpp"

namespace nestree {

const char* to_string(NodeKind k) { return k == NodeKind::kBlock ? "block" : "hub"; }

std::optional<int> TreeDecomposition::find_bag(const VertexSet& b) const {
  for (size_t i = 0; i < bags.size(); ++i)
    if (bags[i] == b) return static_cast<int>(i);
  return std::nullopt;
}

TreeDecomposition trivial_decomposition(const Graph& g) {
  TreeDecomposition td;
  td.host = g;
  td.tree = Graph::with_vertices(1, {});
  td.bags = {g.all_vertices()};
  td.kind = {NodeKind::kBlock};
  return td;
}

namespace {

// Tree nodes on the side of `from` once tree edge `cut` is removed.
std::vector<char> tree_side(const Graph& tree, int cut, int from) {
  std::vector<char> side(static_cast<size_t>(tree.num_vertices()), 0);
  std::vector<int> stack{from};
  side[static_cast<size_t>(from)] = 1;
  while (!stack.empty()) {
    const int t = stack.back();
    stack.pop_back();
    const auto nb = tree.neighbors(t);
    const auto ie = tree.incident_edges(t);
    for (size_t i = 0; i < nb.size(); ++i) {
      if (ie[i] == cut || side[static_cast<size_t>(nb[i])]) continue;
      side[static_cast<size_t>(nb[i])] = 1;
      stack.push_back(nb[i]);
    }
  }
  return side;
}

}  // namespace

std::vector<Separation> edge_separations(const TreeDecomposition& td) {
  const int n = td.host.num_vertices();
  std::vector<Separation> out;
  for (int i = 0; i < td.tree.num_edges(); ++i) {
    const auto [a, b] = td.tree.edge(i);
    const auto side = tree_side(td.tree, i, a);
    VertexSet u1(n), u2(n);
    for (int t = 0; t < td.num_nodes(); ++t) (side[static_cast<size_t>(t)] ? u1 : u2) |= td.bags[static_cast<size_t>(t)];
    Separation s{u1 - u2, u1 & u2, u2 - u1};
    out.push_back(s);
    out.push_back(s.flip());
  }
  return out;
}

std::vector<VertexSet> n_blocks(const Graph& g, const SeparationFamily& fam) {
  const FamilyReport rep = family_verify(fam);
  if (!rep.nested)
    throw VerificationError("family is not nested: members " + std::to_string(rep.crossing->first) + " and " +
                            std::to_string(rep.crossing->second) + " cross");
  const int n = g.num_vertices();
  std::vector<VertexSet> compat(static_cast<size_t>(n), g.all_vertices());
  for (int v = 0; v < n; ++v) compat[static_cast<size_t>(v)].reset(v);
  for (const auto& s : fam.items()) {
    require_separation(g, s);
    s.y.for_each([&](int u) { compat[static_cast<size_t>(u)] -= s.z; });
    s.z.for_each([&](int u) { compat[static_cast<size_t>(u)] -= s.y; });
  }
  // Bron-Kerbosch with pivoting on the compatibility graph.
  std::vector<VertexSet> cliques;
  auto bk = [&](auto&& self, VertexSet r, VertexSet p, VertexSet x) -> void {
    if (p.empty() && x.empty()) {
      cliques.push_back(r);
      return;
    }
    int pivot = -1;
    int best = -1;
    (p | x).for_each([&](int u) {
      const int c = (p & compat[static_cast<size_t>(u)]).count();
      if (c > best) {
        best = c;
        pivot = u;
      }
    });
    const VertexSet cand = p - compat[static_cast<size_t>(pivot)];
    cand.for_each([&](int v) {
      VertexSet r2 = r;
      r2.set(v);
      self(self, r2, p & compat[static_cast<size_t>(v)], x & compat[static_cast<size_t>(v)]);
      p.reset(v);
      x.set(v);
    });
  };
  if (n > 0) bk(bk, VertexSet(n), g.all_vertices(), VertexSet(n));
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

namespace {

int uf_find(std::vector<int>& p, int x) {
  while (p[static_cast<size_t>(x)] != x) {
    p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
    x = p[static_cast<size_t>(x)];
  }
  return x;
}

}  // namespace

TreeDecomposition build_from_nested(const Graph& g, const SeparationFamily& fam, BuildReport* report) {
  BuildReport local;
  BuildReport& rep = report ? *report : local;
  rep = BuildReport{};
  std::vector<Separation> items;
  std::unordered_set<Separation, SeparationHash> seen;
  std::vector<int> origin;
  for (size_t i = 0; i < fam.size(); ++i) {
    require_separation(g, fam[i]);
    if (!fam[i].proper()) {
      ++rep.dropped_non_proper;
      continue;
    }
    if (seen.insert(fam[i]).second) {
      items.push_back(fam[i]);
      origin.push_back(static_cast<int>(i));
    }
  }
  const SeparationFamily proper(items);
  const FamilyReport fr = family_verify(proper);
  if (!fr.symmetric)
    throw VerificationError("family is not symmetric: member " +
                            std::to_string(origin[static_cast<size_t>(fr.missing_flip)]) + " lacks its flip");
  if (!fr.nested)
    throw VerificationError("family is not nested: members " +
                            std::to_string(origin[static_cast<size_t>(fr.crossing->first)]) + " and " +
                            std::to_string(origin[static_cast<size_t>(fr.crossing->second)]) + " cross");
  rep.input_size = static_cast<int>(items.size());
  rep.edge_of_separation.assign(fam.size(), -1);
  if (items.empty()) return trivial_decomposition(g);

  const int m = static_cast<int>(items.size());
  std::map<Separation, int> index;
  for (int i = 0; i < m; ++i) index[items[static_cast<size_t>(i)]] = i;
  std::vector<int> flip(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) flip[static_cast<size_t>(i)] = index.at(items[static_cast<size_t>(i)].flip());

  std::vector<std::vector<char>> less(static_cast<size_t>(m), std::vector<char>(static_cast<size_t>(m), 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) less[static_cast<size_t>(i)][static_cast<size_t>(j)] = sep_less(items[static_cast<size_t>(i)], items[static_cast<size_t>(j)]);

  // s ~ r when s is an immediate predecessor of the flip of r; the classes
  // are the nodes of the tree.
  std::vector<int> parent(static_cast<size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  for (int s = 0; s < m; ++s)
    for (int r = 0; r < m; ++r) {
      const int rf = flip[static_cast<size_t>(r)];
      if (s == r || !less[static_cast<size_t>(s)][static_cast<size_t>(rf)]) continue;
      bool immediate = true;
      for (int t = 0; t < m && immediate; ++t)
        if (less[static_cast<size_t>(s)][static_cast<size_t>(t)] && less[static_cast<size_t>(t)][static_cast<size_t>(rf)]) immediate = false;
      if (!immediate) continue;
      const int a = uf_find(parent, s);
      const int b = uf_find(parent, r);
      if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }

  std::map<int, std::vector<int>> classes;
  for (int s = 0; s < m; ++s) classes[uf_find(parent, s)].push_back(s);
  struct Node {
    VertexSet bag;
    int first;
    std::vector<int> members;
  };
  std::vector<Node> nodes;
  for (auto& [root, members] : classes) {
    VertexSet bag = g.all_vertices();
    for (int s : members) bag &= items[static_cast<size_t>(s)].s | items[static_cast<size_t>(s)].z;
    nodes.push_back({bag, members.front(), members});
  }
  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
    if (!(a.bag == b.bag)) return a.bag < b.bag;
    return a.first < b.first;
  });
  std::vector<int> node_of(static_cast<size_t>(m), -1);
  for (size_t t = 0; t < nodes.size(); ++t)
    for (int s : nodes[t].members) node_of[static_cast<size_t>(s)] = static_cast<int>(t);

  std::vector<std::pair<int, int>> tree_edges;
  std::vector<int> rep_member;  // member oriented from the smaller endpoint
  for (int s = 0; s < m; ++s) {
    const int sf = flip[static_cast<size_t>(s)];
    if (sf < s) continue;
    const int from = node_of[static_cast<size_t>(sf)];
    const int to = node_of[static_cast<size_t>(s)];
    if (from == to) throw InternalError("separation and its flip fall into one node");
    tree_edges.emplace_back(std::min(from, to), std::max(from, to));
    rep_member.push_back(from < to ? s : sf);
  }
  TreeDecomposition td;
  td.host = g;
  try {
    td.tree = Graph::with_vertices(static_cast<int>(nodes.size()), tree_edges);
  } catch (const InputError&) {
    throw InternalError("separation classes produced parallel tree edges");
  }
  if (!is_connected(td.tree) || td.tree.num_edges() != td.tree.num_vertices() - 1)
    throw InternalError("separation classes do not form a tree");
  for (const auto& nd : nodes) td.bags.push_back(nd.bag);

  // Bijection: the edge-separation read towards the node of s must be s.
  const auto esep = edge_separations(td);
  for (int i = 0; i < td.tree.num_edges(); ++i) {
    const int s = rep_member[static_cast<size_t>(i)];
    if (!(esep[static_cast<size_t>(2 * i)] == items[static_cast<size_t>(s)]) ||
        !(esep[static_cast<size_t>(2 * i + 1)] == items[static_cast<size_t>(flip[static_cast<size_t>(s)])]))
      throw InternalError("edge-separation of tree edge " + std::to_string(i) + " differs from its family member");
  }
  std::map<Separation, int> slot;
  for (int i = 0; i < 2 * td.tree.num_edges(); ++i) slot[esep[static_cast<size_t>(i)]] = i;
  for (size_t i = 0; i < fam.size(); ++i) {
    const auto it = slot.find(fam[i]);
    if (it != slot.end()) rep.edge_of_separation[i] = it->second;
  }

  const auto blocks = n_blocks(g, proper);
  std::set<VertexSet> block_set(blocks.begin(), blocks.end());
  for (const auto& bag : td.bags) {
    if (block_set.count(bag)) {
      td.kind.push_back(NodeKind::kBlock);
    } else if (std::any_of(items.begin(), items.end(), [&](const Separation& s) { return s.s == bag; })) {
      td.kind.push_back(NodeKind::kHub);
    } else {
      throw InternalError("bag is neither a block nor a separator");
    }
  }
  const DecompositionReport vr = verify_td(g, td);
  if (!vr.valid) throw InternalError("built decomposition fails verification: " + vr.witness);
  return td;
}

bool is_two_connected(const Graph& g) {
  return g.num_vertices() >= 3 && vertex_connectivity(g) >= 2;
}

namespace {

int ends_proxy(const Graph& part) {
  const int n = part.num_vertices();
  if (n == 0 || !is_connected(part)) return 0;
  int center = 0;
  int best = -1;
  for (int v = 0; v < n; ++v) {
    const auto d = bfs_from_index(part, v);
    const int ecc = *std::max_element(d.begin(), d.end());
    if (best < 0 || ecc < best) {
      best = ecc;
      center = v;
    }
  }
  VertexSet core(n);
  const auto d = bfs_from_index(part, center);
  for (int v = 0; v < n; ++v)
    if (d[static_cast<size_t>(v)] <= best / 2) core.set(v);
  return static_cast<int>(components_outside(part, core).size());
}

}  // namespace

DecompositionReport verify_td(const Graph& g, const TreeDecomposition& td, const CertificateContext* cert) {
  DecompositionReport rep;
  auto fail = [&](const std::string& w) {
    if (rep.witness.empty()) rep.witness = w;
  };
  const int n = g.num_vertices();
  const int t = td.num_nodes();
  if (static_cast<int>(td.bags.size()) != t || static_cast<int>(td.kind.size()) != t)
    throw InputError("decomposition has mismatched node arrays");
  for (const auto& b : td.bags)
    if (b.universe() != n) throw InputError("bag is over a different host");
  rep.tree_ok = t > 0 && is_connected(td.tree) && td.tree.num_edges() == t - 1;
  if (!rep.tree_ok) fail("decomposition tree is not a tree");

  VertexSet cover(n);
  for (const auto& b : td.bags) cover |= b;
  rep.vertices_covered = cover.count() == n;
  if (!rep.vertices_covered) fail("vertex " + std::to_string(g.id((g.all_vertices() - cover).first())) + " lies in no bag");

  rep.edges_covered = true;
  for (int e = 0; e < g.num_edges() && rep.edges_covered; ++e) {
    const auto [u, v] = g.edge(e);
    const bool ok = std::any_of(td.bags.begin(), td.bags.end(), [&](const VertexSet& b) { return b.test(u) && b.test(v); });
    if (!ok) {
      rep.edges_covered = false;
      fail("edge " + std::to_string(g.id(u)) + "-" + std::to_string(g.id(v)) + " lies in no bag");
    }
  }

  rep.traces_connected = true;
  if (rep.tree_ok) {
    for (int v = 0; v < n && rep.traces_connected; ++v) {
      VertexSet nodes(t);
      for (int i = 0; i < t; ++i)
        if (td.bags[static_cast<size_t>(i)].test(v)) nodes.set(i);
      if (nodes.count() > 1 && components_within(td.tree, nodes).size() != 1) {
        rep.traces_connected = false;
        fail("nodes containing vertex " + std::to_string(g.id(v)) + " are not connected in the tree");
      }
    }
  }
  rep.valid = rep.tree_ok && rep.vertices_covered && rep.edges_covered && rep.traces_connected;

  for (const auto& b : td.bags) rep.width = std::max(rep.width, b.count() - 1);
  for (int i = 0; i < td.tree.num_edges(); ++i) rep.adhesion = std::max(rep.adhesion, td.adhesion_set(i).count());

  if (cert && !(cert->embedding.graph() == g)) throw InputError("certificate embedding is over a different graph");
  rep.parts_connected = true;
  rep.parts_two_connected = true;
  bool cert_all = true;
  for (int i = 0; i < t; ++i) {
    const VertexSet& bag = td.bags[static_cast<size_t>(i)];
    const Graph part = g.induced(bag);
    PartReport pr;
    pr.node = i;
    pr.size = bag.count();
    pr.connected = part.num_vertices() > 0 && is_connected(part);
    pr.two_connected = is_two_connected(part);
    pr.ends_proxy = ends_proxy(part);
    if (cert && td.kind[static_cast<size_t>(i)] == NodeKind::kBlock) {
      const RotationSystem sub = cert->embedding.restrict_to(bag);
      const RestrictedFamily rf = restrict_family(g, cert->cycles, bag);
      pr.certificate = facial_generation_certificate(sub, rf.cycles);
      cert_all = cert_all && *pr.certificate;
    }
    rep.parts_connected = rep.parts_connected && pr.connected;
    rep.parts_two_connected = rep.parts_two_connected && pr.two_connected;
    rep.parts.push_back(pr);
  }
  if (cert) rep.certificate_ok = cert_all;
  return rep;
}

std::vector<std::pair<int, int>> torso_virtual_edges(const TreeDecomposition& td, int t) {
  if (t < 0 || t >= td.num_nodes()) throw InputError("unknown decomposition node " + std::to_string(t));
  std::set<std::pair<int, int>> extra;
  for (int e : td.tree.incident_edges(t)) {
    const auto a = td.adhesion_set(e).indices();
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = i + 1; j < a.size(); ++j)
        if (!td.host.adjacent(a[i], a[j])) extra.emplace(a[i], a[j]);
  }
  return {extra.begin(), extra.end()};
}

Graph torso(const TreeDecomposition& td, int t) {
  const auto extra = torso_virtual_edges(td, t);
  const Graph part = td.host.induced(td.bags[static_cast<size_t>(t)]);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int e = 0; e < part.num_edges(); ++e) edges.push_back(part.edge_ids(e));
  for (const auto& [u, v] : extra) edges.emplace_back(td.host.id(u), td.host.id(v));
  return Graph(part.ids(), edges);
}

RestrictedFamily restrict_family(const Graph& g, const std::vector<EdgeSet>& fam, const VertexSet& x) {
  RestrictedFamily out;
  out.subgraph = g.induced(x);
  const auto host_edge = g.edge_map_from(out.subgraph);
  std::vector<int> sub_edge(static_cast<size_t>(g.num_edges()), -1);
  for (size_t i = 0; i < host_edge.size(); ++i) sub_edge[static_cast<size_t>(host_edge[i])] = static_cast<int>(i);
  for (size_t i = 0; i < fam.size(); ++i) {
    if (!cycle_vertices(g, fam[i]).is_subset_of(x)) continue;
    EdgeSet c(out.subgraph.num_edges());
    fam[i].for_each([&](int e) { c.set(sub_edge[static_cast<size_t>(e)]); });
    out.members.push_back(static_cast<int>(i));
    out.cycles.push_back(std::move(c));
  }
  out.generation = generates_cycle_space(out.cycles, out.subgraph);
  return out;
}

TreeDecomposition fatten(const TreeDecomposition& td, int k) {
  if (k < 0) throw InputError("fattening radius must be nonnegative");
  TreeDecomposition out = td;
  for (auto& b : out.bags) b = ball_around(td.host, b, k);
  return out;
}

int adhesion_diameter_bound(const TreeDecomposition& td) {
  int k = 0;
  std::map<int, std::vector<int>> dist;
  for (int t = 0; t < td.num_nodes(); ++t)
    for (const auto& [u, v] : torso_virtual_edges(td, t)) {
      auto it = dist.find(u);
      if (it == dist.end()) it = dist.emplace(u, bfs_from_index(td.host, u)).first;
      const int d = it->second[static_cast<size_t>(v)];
      if (d == kUnreachable) throw InputError("adhesion set spans two components of the host");
      k = std::max(k, d);
    }
  return k;
}

TreeDecomposition refine(const TreeDecomposition& outer, const std::vector<std::optional<TreeDecomposition>>& inner) {
  const int t = outer.num_nodes();
  if (static_cast<int>(inner.size()) != t) throw InputError("refinement needs one entry per outer node");
  TreeDecomposition out;
  out.host = outer.host;
  std::vector<int> first(static_cast<size_t>(t) + 1, 0);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < t; ++i) {
    const auto& in = inner[static_cast<size_t>(i)];
    const int base = first[static_cast<size_t>(i)];
    if (!in) {
      out.bags.push_back(outer.bags[static_cast<size_t>(i)]);
      out.kind.push_back(outer.kind[static_cast<size_t>(i)]);
      first[static_cast<size_t>(i) + 1] = base + 1;
      continue;
    }
    const Graph expected = torso(outer, i);
    if (!(in->host == expected)) throw InputError("inner decomposition of node " + std::to_string(i) + " is not over its torso");
    for (int j = 0; j < in->num_nodes(); ++j) {
      VertexSet b(outer.host.num_vertices());
      in->bags[static_cast<size_t>(j)].for_each([&](int v) { b.set(outer.host.index(in->host.id(v))); });
      out.bags.push_back(b);
      out.kind.push_back(in->kind[static_cast<size_t>(j)]);
    }
    for (const auto& [a, b] : in->tree.edges()) edges.emplace_back(base + a, base + b);
    first[static_cast<size_t>(i) + 1] = base + in->num_nodes();
  }
  auto attach = [&](int node, const VertexSet& a) {
    for (int j = first[static_cast<size_t>(node)]; j < first[static_cast<size_t>(node) + 1]; ++j)
      if (a.is_subset_of(out.bags[static_cast<size_t>(j)])) return j;
    throw InputError("adhesion set {" + [&] {
      std::string s;
      for (VertexId id : outer.host.ids_of(a)) s += (s.empty() ? "" : ",") + std::to_string(id);
      return s;
    }() + "} lies in no inner bag of node " + std::to_string(node));
  };
  for (int e = 0; e < outer.tree.num_edges(); ++e) {
    const auto [a, b] = outer.tree.edge(e);
    const VertexSet adh = outer.adhesion_set(e);
    const int x = attach(a, adh);
    const int y = attach(b, adh);
    edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  out.tree = Graph::with_vertices(first.back(), edges);
  return out;
}

}  // namespace nestree
