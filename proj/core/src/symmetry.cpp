#include "nestree/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "nestree/cyclespace.hpp"
#include "nestree/error.hpp"

namespace nestree {

bool is_automorphism(const Graph& g, const Permutation& p) {
  const int n = g.num_vertices();
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> hit(static_cast<size_t>(n), 0);
  for (int w : p) {
    if (w < 0 || w >= n || hit[static_cast<size_t>(w)]) return false;
    hit[static_cast<size_t>(w)] = 1;
  }
  for (const auto& [u, v] : g.edges())
    if (!g.adjacent(p[static_cast<size_t>(u)], p[static_cast<size_t>(v)])) return false;
  return true;
}

bool is_partial_automorphism(const Graph& g, const PartialMap& m) {
  const int n = g.num_vertices();
  if (static_cast<int>(m.image.size()) != n) return false;
  std::vector<char> hit(static_cast<size_t>(n), 0);
  std::vector<int> dom;
  for (int v = 0; v < n; ++v) {
    const int w = m.image[static_cast<size_t>(v)];
    if (w < 0) continue;
    if (w >= n || hit[static_cast<size_t>(w)]) return false;
    hit[static_cast<size_t>(w)] = 1;
    dom.push_back(v);
  }
  for (size_t i = 0; i < dom.size(); ++i)
    for (size_t j = i + 1; j < dom.size(); ++j)
      if (g.adjacent(dom[i], dom[j]) != g.adjacent(m(dom[i]), m(dom[j]))) return false;
  return true;
}

void validate(const Action& a) {
  for (size_t i = 0; i < a.generators.size(); ++i)
    if (!is_automorphism(a.host, a.generators[i])) throw InputError("generator " + std::to_string(i) + " is not an automorphism");
  for (size_t i = 0; i < a.partial.size(); ++i)
    if (!is_partial_automorphism(a.host, a.partial[i]))
      throw InputError("partial map " + std::to_string(i) + " is not a partial automorphism");
}

std::vector<ActionMap> action_maps(const Action& a) {
  const int n = a.host.num_vertices();
  std::vector<ActionMap> out;
  for (size_t i = 0; i < a.generators.size(); ++i)
    out.push_back({a.generators[i], a.host.all_vertices(), true, "g" + std::to_string(i)});
  for (size_t i = 0; i < a.partial.size(); ++i) {
    const auto& img = a.partial[i].image;
    ActionMap fwd{img, VertexSet(n), false, "p" + std::to_string(i)};
    ActionMap inv{std::vector<int>(static_cast<size_t>(n), -1), VertexSet(n), false, "p" + std::to_string(i) + "^-1"};
    for (int v = 0; v < n; ++v) {
      const int w = img[static_cast<size_t>(v)];
      if (w < 0) continue;
      fwd.domain.set(v);
      inv.domain.set(w);
      inv.image[static_cast<size_t>(w)] = v;
    }
    out.push_back(std::move(fwd));
    out.push_back(std::move(inv));
  }
  return out;
}

std::optional<VertexSet> apply(const ActionMap& m, const VertexSet& s) {
  if (!m.total && !s.is_subset_of(m.domain)) return std::nullopt;
  VertexSet out(s.universe());
  s.for_each([&](int v) { out.set(m.image[static_cast<size_t>(v)]); });
  if (!m.total && !out.is_subset_of(m.domain)) return std::nullopt;
  return out;
}

std::optional<int> apply_edge(const Graph& g, const ActionMap& m, int e) {
  const auto [u, v] = g.edge(e);
  const int a = m.image[static_cast<size_t>(u)];
  const int b = m.image[static_cast<size_t>(v)];
  if (!m.total && (a < 0 || b < 0 || !m.domain.test(a) || !m.domain.test(b))) return std::nullopt;
  return g.edge_index(a, b);
}

std::optional<EdgeSet> apply(const Graph& g, const ActionMap& m, const EdgeSet& c) {
  EdgeSet out(c.universe());
  bool ok = true;
  c.for_each([&](int e) {
    if (!ok) return;
    const auto f = apply_edge(g, m, e);
    if (!f) {
      ok = false;
      return;
    }
    out.set(*f);
  });
  if (!ok) return std::nullopt;
  return out;
}

std::optional<Separation> apply(const ActionMap& m, const Separation& s) {
  if (!m.total) return std::nullopt;
  return Separation{*apply(m, s.y), *apply(m, s.s), *apply(m, s.z)};
}

namespace {

// Degree followed by the distance histogram.
std::vector<std::vector<int>> profiles(const Graph& g, const DistanceMatrix& d) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> out(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::vector<int> hist(static_cast<size_t>(n) + 2, 0);
    for (int w = 0; w < n; ++w) {
      const int x = d(v, w);
      ++hist[static_cast<size_t>(x == kUnreachable ? n + 1 : x)];
    }
    hist.insert(hist.begin(), g.degree(v));
    out[static_cast<size_t>(v)] = std::move(hist);
  }
  return out;
}

struct Matcher {
  const Graph& ga;
  const Graph& gb;
  DistanceMatrix da;
  DistanceMatrix db;
  std::vector<std::vector<int>> pa;
  std::vector<std::vector<int>> pb;
  long budget;
  long nodes = 0;

  Matcher(const Graph& a, const Graph& b, long node_budget)
      : ga(a), gb(b), da(a), db(b), pa(profiles(a, da)), pb(profiles(b, db)), budget(node_budget) {}

  bool consistent(const std::vector<int>& order, size_t pos, const std::vector<int>& phi, int u, int w) const {
    if (pa[static_cast<size_t>(u)] != pb[static_cast<size_t>(w)]) return false;
    for (size_t i = 0; i < pos; ++i) {
      const int x = order[i];
      if (da(u, x) != db(w, phi[static_cast<size_t>(x)])) return false;
    }
    return true;
  }

  // Extension order: the prefix, then breadth-first from it.
  std::vector<int> order_from(const std::vector<int>& prefix) const {
    const int n = ga.num_vertices();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> order;
    std::deque<int> q;
    for (int v : prefix) {
      seen[static_cast<size_t>(v)] = 1;
      order.push_back(v);
      q.push_back(v);
    }
    for (int start = 0; start <= n; ++start) {
      while (!q.empty()) {
        const int u = q.front();
        q.pop_front();
        for (int w : ga.neighbors(u))
          if (!seen[static_cast<size_t>(w)]) {
            seen[static_cast<size_t>(w)] = 1;
            order.push_back(w);
            q.push_back(w);
          }
      }
      if (start < n && !seen[static_cast<size_t>(start)]) {
        seen[static_cast<size_t>(start)] = 1;
        order.push_back(start);
        q.push_back(start);
      }
    }
    return order;
  }

  bool extend(const std::vector<int>& order, size_t pos, std::vector<int>& phi, std::vector<char>& used) {
    if (pos == order.size()) return true;
    if (++nodes > budget) throw BudgetExceeded("automorphism search exceeded its node budget");
    const int u = order[pos];
    // A mapped neighbor narrows the candidates to its image's neighbors.
    int anchor = -1;
    for (int x : ga.neighbors(u))
      if (phi[static_cast<size_t>(x)] >= 0) {
        anchor = x;
        break;
      }
    auto attempt = [&](int w) {
      if (used[static_cast<size_t>(w)] || !consistent(order, pos, phi, u, w)) return false;
      phi[static_cast<size_t>(u)] = w;
      used[static_cast<size_t>(w)] = 1;
      if (extend(order, pos + 1, phi, used)) return true;
      phi[static_cast<size_t>(u)] = -1;
      used[static_cast<size_t>(w)] = 0;
      return false;
    };
    if (anchor >= 0) {
      for (int w : gb.neighbors(phi[static_cast<size_t>(anchor)]))
        if (attempt(w)) return true;
    } else {
      for (int w = 0; w < gb.num_vertices(); ++w)
        if (attempt(w)) return true;
    }
    return false;
  }

  // Prefix pairs prefix[i] -> images[i] are fixed and assumed consistent.
  std::optional<std::vector<int>> solve(const std::vector<int>& prefix, const std::vector<int>& images) {
    const int n = ga.num_vertices();
    std::vector<int> phi(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n), 0);
    const auto order = order_from(prefix);
    for (size_t i = 0; i < prefix.size(); ++i) {
      if (!consistent(order, i, phi, prefix[i], images[i]) || used[static_cast<size_t>(images[i])]) return std::nullopt;
      phi[static_cast<size_t>(prefix[i])] = images[i];
      used[static_cast<size_t>(images[i])] = 1;
    }
    if (!extend(order, prefix.size(), phi, used)) return std::nullopt;
    return phi;
  }
};

std::string multiply_decimal(const std::string& a, int k) {
  std::string out;
  int carry = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    const int x = (*it - '0') * k + carry;
    out.push_back(static_cast<char>('0' + x % 10));
    carry = x / 10;
  }
  while (carry > 0) {
    out.push_back(static_cast<char>('0' + carry % 10));
    carry /= 10;
  }
  while (out.size() > 1 && out.back() == '0') out.pop_back();
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<int> orbit_of(int v, const std::vector<Permutation>& gens, int n) {
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> out{v};
  seen[static_cast<size_t>(v)] = 1;
  for (size_t i = 0; i < out.size(); ++i)
    for (const auto& p : gens) {
      const int w = p[static_cast<size_t>(out[i])];
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        out.push_back(w);
      }
    }
  return out;
}

}  // namespace

AutomorphismGroup automorphism_group(const Graph& g, const AutomorphismOptions& opts) {
  const int n = g.num_vertices();
  if (n > opts.max_vertices)
    throw BudgetExceeded("automorphism search is limited to " + std::to_string(opts.max_vertices) + " vertices, got " +
                         std::to_string(n));
  AutomorphismGroup out;
  out.action.host = g;
  Matcher m(g, g, opts.node_budget);
  std::vector<std::pair<int, int>> levels;
  // Pointwise stabilizers of 0..i-1, deepest first.
  for (int i = n - 1; i >= 0; --i) {
    std::vector<int> orbit = orbit_of(i, out.action.generators, n);
    std::vector<char> in_orbit(static_cast<size_t>(n), 0);
    for (int v : orbit) in_orbit[static_cast<size_t>(v)] = 1;
    std::vector<int> prefix(static_cast<size_t>(i) + 1);
    std::iota(prefix.begin(), prefix.end(), 0);
    for (int c = i + 1; c < n; ++c) {
      if (in_orbit[static_cast<size_t>(c)]) continue;
      std::vector<int> images = prefix;
      images.back() = c;
      const auto phi = m.solve(prefix, images);
      if (!phi) continue;
      out.action.generators.push_back(*phi);
      orbit = orbit_of(i, out.action.generators, n);
      for (int v : orbit) in_orbit[static_cast<size_t>(v)] = 1;
    }
    if (orbit.size() > 1) levels.emplace_back(i, static_cast<int>(orbit.size()));
  }
  std::reverse(levels.begin(), levels.end());
  out.order = "1";
  for (const auto& [b, size] : levels) {
    out.base.push_back(b);
    out.orbit_sizes.push_back(size);
    out.order = multiply_decimal(out.order, size);
  }
  return out;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b, const AutomorphismOptions& opts) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return std::nullopt;
  if (a.num_vertices() > opts.max_vertices)
    throw BudgetExceeded("isomorphism search is limited to " + std::to_string(opts.max_vertices) + " vertices");
  if (a.num_vertices() == 0) return std::vector<int>{};
  Matcher m(a, b, opts.node_budget);
  for (int w = 0; w < b.num_vertices(); ++w) {
    const auto phi = m.solve({0}, {w});
    if (phi) return phi;
  }
  return std::nullopt;
}

namespace {

int uf_find(std::vector<int>& p, int x) {
  while (p[static_cast<size_t>(x)] != x) {
    p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
    x = p[static_cast<size_t>(x)];
  }
  return x;
}

void uf_union(std::vector<int>& p, int a, int b) {
  a = uf_find(p, a);
  b = uf_find(p, b);
  if (a != b) p[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
}

std::vector<std::vector<int>> classes(std::vector<int>& p) {
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < static_cast<int>(p.size()); ++i) by_root[uf_find(p, i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [r, members] : by_root) out.push_back(std::move(members));
  return out;
}

template <class Item, class Hash, class Apply>
std::vector<std::vector<int>> orbits_of(const Action& a, const std::vector<Item>& items, Apply apply_fn) {
  std::unordered_map<Item, int, Hash> where;
  for (size_t i = 0; i < items.size(); ++i) where.emplace(items[i], static_cast<int>(i));
  std::vector<int> parent(items.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& m : action_maps(a))
    for (size_t i = 0; i < items.size(); ++i) {
      const auto img = apply_fn(m, items[i]);
      if (!img) continue;
      const auto it = where.find(*img);
      if (it != where.end()) uf_union(parent, static_cast<int>(i), it->second);
    }
  return classes(parent);
}

}  // namespace

std::vector<std::vector<int>> vertex_orbits(const Action& a) {
  const int n = a.host.num_vertices();
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& m : action_maps(a))
    for (int v = 0; v < n; ++v) {
      const int w = m.image[static_cast<size_t>(v)];
      if (w < 0 || (!m.total && !m.domain.test(w))) continue;
      uf_union(parent, v, w);
    }
  return classes(parent);
}

std::vector<std::vector<int>> edge_orbits(const Action& a) {
  const int n = a.host.num_edges();
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& m : action_maps(a))
    for (int e = 0; e < n; ++e)
      if (const auto f = apply_edge(a.host, m, e)) uf_union(parent, e, *f);
  return classes(parent);
}

std::vector<std::vector<int>> cycle_orbits(const Action& a, const std::vector<EdgeSet>& cycles) {
  return orbits_of<EdgeSet, IndexSetHash>(a, cycles, [&](const ActionMap& m, const EdgeSet& c) { return apply(a.host, m, c); });
}

std::vector<std::vector<int>> separation_orbits(const Action& a, const std::vector<Separation>& seps) {
  return orbits_of<Separation, SeparationHash>(a, seps, [](const ActionMap& m, const Separation& s) { return apply(m, s); });
}

InvarianceReport is_invariant(const Action& a, const std::vector<EdgeSet>& cycles) {
  InvarianceReport rep;
  std::unordered_set<EdgeSet, IndexSetHash> present(cycles.begin(), cycles.end());
  for (const auto& m : action_maps(a))
    for (size_t i = 0; i < cycles.size(); ++i) {
      const auto img = apply(a.host, m, cycles[i]);
      if (!img) {
        ++rep.skipped_boundary;
        continue;
      }
      ++rep.checked;
      if (rep.invariant && !present.count(*img)) {
        rep.invariant = false;
        rep.witness_map = m.name;
        rep.witness_item = static_cast<int>(i);
        rep.witness = m.name + " moves cycle " + std::to_string(i) + " out of the family";
      }
    }
  rep.orbit_count = static_cast<int>(cycle_orbits(a, cycles).size());
  return rep;
}

InvarianceReport is_invariant(const Action& a, const SeparationFamily& fam) {
  InvarianceReport rep;
  std::unordered_set<Separation, SeparationHash> present(fam.items().begin(), fam.items().end());
  for (const auto& m : action_maps(a))
    for (size_t i = 0; i < fam.size(); ++i) {
      const auto img = apply(m, fam[i]);
      if (!img) {
        ++rep.skipped_boundary;
        continue;
      }
      ++rep.checked;
      if (rep.invariant && !present.count(*img)) {
        rep.invariant = false;
        rep.witness_map = m.name;
        rep.witness_item = static_cast<int>(i);
        rep.witness = m.name + " moves separation " + std::to_string(i) + " out of the family";
      }
    }
  rep.orbit_count = static_cast<int>(separation_orbits(a, fam.items()).size());
  return rep;
}

CanonicityReport canonicity_check(const Action& a, const TreeDecomposition& td) {
  if (!(td.host == a.host)) throw InputError("decomposition and action are over different hosts");
  CanonicityReport rep;
  const int t = td.num_nodes();
  std::map<VertexSet, std::vector<int>> by_bag;
  for (int i = 0; i < t; ++i) by_bag[td.bags[static_cast<size_t>(i)]].push_back(i);
  std::vector<int> node_parent(static_cast<size_t>(t));
  std::iota(node_parent.begin(), node_parent.end(), 0);
  std::vector<int> edge_parent(static_cast<size_t>(td.tree.num_edges()));
  std::iota(edge_parent.begin(), edge_parent.end(), 0);

  // Breadth-first node order keeps tree-edge constraints local.
  std::vector<int> order;
  {
    std::vector<char> seen(static_cast<size_t>(t), 0);
    for (int s = 0; s < t; ++s) {
      if (seen[static_cast<size_t>(s)]) continue;
      seen[static_cast<size_t>(s)] = 1;
      order.push_back(s);
      for (size_t i = order.size() - 1; i < order.size(); ++i)
        for (int w : td.tree.neighbors(order[i]))
          if (!seen[static_cast<size_t>(w)]) {
            seen[static_cast<size_t>(w)] = 1;
            order.push_back(w);
          }
    }
  }

  for (const auto& m : action_maps(a)) {
    std::vector<std::vector<int>> cand(static_cast<size_t>(t));
    std::vector<char> checked(static_cast<size_t>(t), 0);
    bool bad = false;
    for (int i = 0; i < t && !bad; ++i) {
      const auto img = apply(m, td.bags[static_cast<size_t>(i)]);
      if (!img) {
        ++rep.skipped_nodes;
        continue;
      }
      ++rep.checked_nodes;
      checked[static_cast<size_t>(i)] = 1;
      const auto it = by_bag.find(*img);
      if (it == by_bag.end()) {
        bad = true;
        rep.canonical = false;
        if (rep.witness.empty()) {
          rep.witness_map = m.name;
          rep.witness_node = i;
          rep.witness = m.name + " sends the bag of node " + std::to_string(i) + " to a vertex set that is not a bag";
        }
      } else {
        cand[static_cast<size_t>(i)] = it->second;
      }
    }
    std::vector<int> phi(static_cast<size_t>(t), -1);
    if (bad) {
      rep.tree_maps.push_back(phi);
      continue;
    }
    std::vector<char> used(static_cast<size_t>(t), 0);
    auto assign = [&](auto&& self, size_t pos) -> bool {
      while (pos < order.size() && !checked[static_cast<size_t>(order[pos])]) ++pos;
      if (pos == order.size()) return true;
      const int u = order[pos];
      for (int w : cand[static_cast<size_t>(u)]) {
        if (used[static_cast<size_t>(w)]) continue;
        bool ok = true;
        for (int x : td.tree.neighbors(u))
          if (phi[static_cast<size_t>(x)] >= 0 && !td.tree.adjacent(w, phi[static_cast<size_t>(x)])) {
            ok = false;
            break;
          }
        if (!ok) continue;
        phi[static_cast<size_t>(u)] = w;
        used[static_cast<size_t>(w)] = 1;
        if (self(self, pos + 1)) return true;
        phi[static_cast<size_t>(u)] = -1;
        used[static_cast<size_t>(w)] = 0;
      }
      return false;
    };
    if (!assign(assign, 0)) {
      rep.canonical = false;
      if (rep.witness.empty()) {
        rep.witness_map = m.name;
        rep.witness = m.name + " induces no tree automorphism on the bags";
      }
      std::fill(phi.begin(), phi.end(), -1);
      rep.tree_maps.push_back(phi);
      continue;
    }
    for (int i = 0; i < t; ++i)
      if (phi[static_cast<size_t>(i)] >= 0) uf_union(node_parent, i, phi[static_cast<size_t>(i)]);
    for (int e = 0; e < td.tree.num_edges(); ++e) {
      const auto [x, y] = td.tree.edge(e);
      if (phi[static_cast<size_t>(x)] < 0 || phi[static_cast<size_t>(y)] < 0) continue;
      const auto f = td.tree.edge_index(phi[static_cast<size_t>(x)], phi[static_cast<size_t>(y)]);
      if (f) uf_union(edge_parent, e, *f);
    }
    rep.tree_maps.push_back(phi);
  }
  rep.bag_orbit_count = static_cast<int>(classes(node_parent).size());
  rep.edge_orbit_count = static_cast<int>(classes(edge_parent).size());
  return rep;
}

}  // namespace nestree
