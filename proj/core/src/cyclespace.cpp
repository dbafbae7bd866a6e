#include "nestree/cyclespace.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "nestree/error.hpp"

namespace nestree {

bool is_even(const Graph& g, const EdgeSet& s) {
  if (s.universe() != g.num_edges()) throw InputError("edge set does not match host graph");
  std::vector<int> deg(static_cast<size_t>(g.num_vertices()), 0);
  s.for_each([&](int e) {
    ++deg[static_cast<size_t>(g.edge(e).first)];
    ++deg[static_cast<size_t>(g.edge(e).second)];
  });
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

bool is_cycle(const Graph& g, const EdgeSet& s) {
  if (s.universe() != g.num_edges() || s.empty()) return false;
  std::vector<int> deg(static_cast<size_t>(g.num_vertices()), 0);
  s.for_each([&](int e) {
    ++deg[static_cast<size_t>(g.edge(e).first)];
    ++deg[static_cast<size_t>(g.edge(e).second)];
  });
  int touched = 0;
  for (int d : deg) {
    if (d != 0 && d != 2) return false;
    touched += d == 2 ? 1 : 0;
  }
  // Walk from one vertex; a single cycle visits every touched vertex.
  const int start = g.edge(s.first()).first;
  int prev = -1;
  int cur = start;
  int steps = 0;
  do {
    int next = -1;
    const auto nb = g.neighbors(cur);
    const auto ie = g.incident_edges(cur);
    for (size_t i = 0; i < nb.size(); ++i)
      if (s.test(ie[i]) && nb[i] != prev) {
        next = nb[i];
        break;
      }
    if (next < 0) return false;
    prev = cur;
    cur = next;
    ++steps;
  } while (cur != start && steps <= touched);
  return cur == start && steps == touched;
}

VertexSet cycle_vertices(const Graph& g, const EdgeSet& c) {
  VertexSet v(g.num_vertices());
  c.for_each([&](int e) {
    v.set(g.edge(e).first);
    v.set(g.edge(e).second);
  });
  return v;
}

std::vector<int> cycle_sequence(const Graph& g, const EdgeSet& c) {
  if (!is_cycle(g, c)) throw InputError("edge set is not a cycle");
  const VertexSet vs = cycle_vertices(g, c);
  const int start = vs.first();
  std::vector<int> nbrs;
  const auto nb = g.neighbors(start);
  const auto ie = g.incident_edges(start);
  for (size_t i = 0; i < nb.size(); ++i)
    if (c.test(ie[i])) nbrs.push_back(nb[i]);
  std::vector<int> seq{start};
  int prev = start;
  int cur = std::min(nbrs[0], nbrs[1]);
  while (cur != start) {
    seq.push_back(cur);
    const auto n2 = g.neighbors(cur);
    const auto e2 = g.incident_edges(cur);
    int next = -1;
    for (size_t i = 0; i < n2.size(); ++i)
      if (c.test(e2[i]) && n2[i] != prev) {
        next = n2[i];
        break;
      }
    prev = cur;
    cur = next;
  }
  return seq;
}

EdgeSet closed_walk_edges(const Graph& g, std::span<const int> walk) {
  EdgeSet s(g.num_edges());
  for (size_t i = 0; i < walk.size(); ++i) {
    const int u = walk[i];
    const int v = walk[(i + 1) % walk.size()];
    const auto e = g.edge_index(u, v);
    if (!e) throw InputError("walk uses a non-edge");
    s.flip(*e);
  }
  return s;
}

EdgeSet cycle_from_ids(const Graph& g, std::span<const VertexId> ids) {
  std::vector<int> walk;
  for (VertexId id : ids) walk.push_back(g.index(id));
  EdgeSet s = closed_walk_edges(g, walk);
  if (!is_cycle(g, s)) throw InputError("vertex sequence is not a cycle");
  return s;
}

EdgeSet z2_sum(std::span<const EdgeSet> sets) {
  if (sets.empty()) throw InputError("z2_sum of an empty list needs an explicit host");
  return z2_sum(sets, sets.front().universe());
}

EdgeSet z2_sum(std::span<const EdgeSet> sets, int universe) {
  EdgeSet out(universe);
  for (const auto& s : sets) out ^= s;
  return out;
}

EdgeSet z_sum_to_z2(std::span<const long> coeffs, std::span<const EdgeSet> cycles) {
  if (coeffs.size() != cycles.size()) throw InputError("coefficient and cycle lists differ in length");
  if (cycles.empty()) throw InputError("z_sum_to_z2 of an empty list needs an explicit host");
  EdgeSet out(cycles.front().universe());
  for (size_t i = 0; i < cycles.size(); ++i)
    if (coeffs[i] % 2 != 0) out ^= cycles[i];
  return out;
}

int cycle_space_dimension(const Graph& g) {
  return g.num_edges() - g.num_vertices() + count_components(g);
}

std::vector<EdgeSet> cycle_basis(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> parent_edge(static_cast<size_t>(n), -1);
  std::vector<int> parent(static_cast<size_t>(n), -1);
  std::vector<int> depth(static_cast<size_t>(n), -1);
  EdgeSet tree(g.num_edges());
  for (int root = 0; root < n; ++root) {
    if (depth[static_cast<size_t>(root)] >= 0) continue;
    depth[static_cast<size_t>(root)] = 0;
    std::deque<int> q{root};
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      const auto nb = g.neighbors(v);
      const auto ie = g.incident_edges(v);
      for (size_t i = 0; i < nb.size(); ++i) {
        const int w = nb[i];
        if (depth[static_cast<size_t>(w)] >= 0) continue;
        depth[static_cast<size_t>(w)] = depth[static_cast<size_t>(v)] + 1;
        parent[static_cast<size_t>(w)] = v;
        parent_edge[static_cast<size_t>(w)] = ie[i];
        tree.set(ie[i]);
        q.push_back(w);
      }
    }
  }
  std::vector<EdgeSet> basis;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (tree.test(e)) continue;
    EdgeSet c(g.num_edges());
    c.set(e);
    int u = g.edge(e).first;
    int v = g.edge(e).second;
    while (u != v) {
      if (depth[static_cast<size_t>(u)] < depth[static_cast<size_t>(v)]) std::swap(u, v);
      c.set(parent_edge[static_cast<size_t>(u)]);
      u = parent[static_cast<size_t>(u)];
    }
    basis.push_back(std::move(c));
  }
  return basis;
}

void Gf2Basis::reduce(EdgeSet& v, std::vector<uint64_t>& combo) const {
  // Rows are kept fully reduced on their pivots, so one pass suffices.
  for (const auto& row : rows_) {
    const int p = row.vec.first();
    if (v.test(p)) {
      v ^= row.vec;
      for (size_t w = 0; w < combo.size() && w < row.combo.size(); ++w) combo[w] ^= row.combo[w];
    }
  }
}

bool Gf2Basis::insert(const EdgeSet& v, int tag) {
  if (v.universe() != universe_) throw InputError("edge set does not match host graph");
  const int words_needed = tag < 0 ? tag_words_ : std::max(tag_words_, tag / 64 + 1);
  if (words_needed > tag_words_) {
    tag_words_ = words_needed;
    for (auto& r : rows_) r.combo.resize(static_cast<size_t>(tag_words_), 0);
  }
  EdgeSet x = v;
  std::vector<uint64_t> combo(static_cast<size_t>(tag_words_), 0);
  if (tag >= 0) combo[static_cast<size_t>(tag / 64)] |= uint64_t{1} << (tag % 64);
  reduce(x, combo);
  if (x.empty()) return false;
  // Eliminate the new pivot from existing rows to keep them reduced.
  const int p = x.first();
  for (auto& row : rows_) {
    if (row.vec.test(p)) {
      row.vec ^= x;
      for (size_t w = 0; w < combo.size(); ++w) row.combo[w] ^= combo[w];
    }
  }
  rows_.push_back({std::move(x), std::move(combo)});
  return true;
}

bool Gf2Basis::represent(const EdgeSet& v, std::vector<int>* tags) const {
  if (v.universe() != universe_) throw InputError("edge set does not match host graph");
  EdgeSet x = v;
  std::vector<uint64_t> combo(static_cast<size_t>(tag_words_), 0);
  reduce(x, combo);
  if (!x.empty()) return false;
  if (tags) {
    tags->clear();
    for (size_t w = 0; w < combo.size(); ++w)
      for (uint64_t bits = combo[w]; bits; bits &= bits - 1)
        tags->push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
  }
  return true;
}

int gf2_rank(std::span<const EdgeSet> fam, int universe) {
  Gf2Basis b(universe);
  for (const auto& s : fam) b.insert(s);
  return b.rank();
}

SpanResult spans(const Graph& g, std::span<const EdgeSet> fam, const EdgeSet& target) {
  SpanResult r;
  if (!is_even(g, target)) {
    r.target_even = false;
    r.reason = "target is not an even edge set";
    return r;
  }
  Gf2Basis b(g.num_edges());
  for (size_t i = 0; i < fam.size(); ++i) b.insert(fam[i], static_cast<int>(i));
  r.in_span = b.represent(target, &r.combination);
  if (!r.in_span) {
    r.combination.clear();
    r.reason = "target is outside the span of the family";
  }
  return r;
}

GenerationReport generates_cycle_space(std::span<const EdgeSet> fam, const Graph& g) {
  for (size_t i = 0; i < fam.size(); ++i)
    if (!is_even(g, fam[i])) throw InputError("family member " + std::to_string(i) + " is not even");
  GenerationReport rep;
  rep.rank = gf2_rank(fam, g.num_edges());
  rep.dimension = cycle_space_dimension(g);
  rep.generates = rep.rank == rep.dimension;
  return rep;
}

std::vector<EdgeSet> short_cycles(const Graph& g, int max_length, const ShortCycleOptions& opts) {
  if (max_length < 3) throw InputError("cycle length bound must be at least 3");
  const int n = g.num_vertices();
  std::vector<std::vector<int>> found;
  long steps = 0;
  std::vector<int> path;
  std::vector<char> on_path(static_cast<size_t>(n), 0);

  // Every cycle is found from its smallest vertex s, through vertices > s,
  // once per direction; keep the direction whose second vertex is smaller.
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[static_cast<size_t>(s)] = 1;
    auto dfs = [&](auto&& self, int v) -> void {
      if (++steps > opts.step_budget)
        throw BudgetExceeded("short cycle enumeration exceeded its step budget");
      for (int w : g.neighbors(v)) {
        if (w == s && path.size() >= 3 && path[1] < path.back()) found.push_back(path);
        if (w <= s || on_path[static_cast<size_t>(w)] || static_cast<int>(path.size()) >= max_length) continue;
        on_path[static_cast<size_t>(w)] = 1;
        path.push_back(w);
        self(self, w);
        path.pop_back();
        on_path[static_cast<size_t>(w)] = 0;
      }
    };
    dfs(dfs, s);
    on_path[static_cast<size_t>(s)] = 0;
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<EdgeSet> out;
  out.reserve(found.size());
  for (const auto& c : found) out.push_back(closed_walk_edges(g, c));
  return out;
}

int girth(const Graph& g) {
  int best = 0;
  const int n = g.num_vertices();
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<size_t>(n), -1);
    std::vector<int> par(static_cast<size_t>(n), -1);
    std::deque<int> q{s};
    dist[static_cast<size_t>(s)] = 0;
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      for (int w : g.neighbors(v)) {
        if (dist[static_cast<size_t>(w)] < 0) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
          par[static_cast<size_t>(w)] = v;
          q.push_back(w);
        } else if (par[static_cast<size_t>(v)] != w) {
          const int len = dist[static_cast<size_t>(v)] + dist[static_cast<size_t>(w)] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace nestree
