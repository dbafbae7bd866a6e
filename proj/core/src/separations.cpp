#include "nestree/separations.hpp"

#include <algorithm>
#include <unordered_set>

#include "nestree/cyclespace.hpp"
#include "nestree/error.hpp"

namespace nestree {

bool is_separation(const Graph& g, const Separation& sep) {
  const int n = g.num_vertices();
  if (sep.y.universe() != n || sep.s.universe() != n || sep.z.universe() != n) return false;
  if (sep.y.intersects(sep.s) || sep.y.intersects(sep.z) || sep.s.intersects(sep.z)) return false;
  if ((sep.y | sep.s | sep.z).count() != n) return false;
  for (const auto& [u, v] : g.edges())
    if ((sep.y.test(u) && sep.z.test(v)) || (sep.z.test(u) && sep.y.test(v))) return false;
  return true;
}

void require_separation(const Graph& g, const Separation& sep) {
  const int n = g.num_vertices();
  if (sep.y.universe() != n || sep.s.universe() != n || sep.z.universe() != n)
    throw InputError("separation is over a different host");
  if (sep.y.intersects(sep.s) || sep.y.intersects(sep.z) || sep.s.intersects(sep.z))
    throw InputError("separation parts are not disjoint");
  if ((sep.y | sep.s | sep.z).count() != n) throw InputError("separation parts do not cover the vertex set");
  for (const auto& [u, v] : g.edges())
    if ((sep.y.test(u) && sep.z.test(v)) || (sep.z.test(u) && sep.y.test(v)))
      throw InputError("separation has an edge between Y and Z: " + std::to_string(g.id(u)) + "-" +
                       std::to_string(g.id(v)));
}

Separation separation_from_sides(const Graph& g, const VertexSet& s, const VertexSet& z) {
  return {g.all_vertices() - s - z, s, z};
}

CycleSeparations separation_from_cycle(const RotationSystem& e, const EdgeSet& c) {
  const SidePair sp = cycle_sides(e, c);
  const VertexSet s = cycle_vertices(e.graph(), c);
  CycleSeparations out;
  out.forward = {sp.side_a, s, sp.side_b};
  out.backward = {sp.side_b, s, sp.side_a};
  out.proper = out.forward.proper();
  return out;
}

bool is_tight(const Graph& g, const Separation& sep) {
  require_separation(g, sep);
  auto full_side = [&](const VertexSet& side) {
    for (const auto& comp : components_within(g, side))
      if (neighborhood(g, comp) == sep.s) return true;
    return false;
  };
  return full_side(sep.y) && full_side(sep.z);
}

bool sep_leq(const Separation& a, const Separation& b) {
  if (a.y.universe() != b.y.universe()) throw InputError("separations over different hosts");
  return a.y.is_subset_of(b.y) && b.z.is_subset_of(a.z);
}

bool sep_less(const Separation& a, const Separation& b) { return sep_leq(a, b) && !(a == b); }

bool sep_nested(const Separation& a, const Separation& b) {
  const Separation bf = b.flip();
  return sep_leq(a, b) || sep_leq(b, a) || sep_leq(a, bf) || sep_leq(bf, a);
}

void SeparationFamily::add(Separation s) {
  items_.push_back(std::move(s));
  symmetric_ = false;
  nested_ = false;
}

SeparationFamily SeparationFamily::symmetric_closure(const std::vector<Separation>& seps) {
  std::unordered_set<Separation, SeparationHash> seen;
  std::vector<Separation> out;
  for (const auto& s : seps) {
    for (const Separation& t : {s, s.flip()}) {
      if (seen.insert(t).second) out.push_back(t);
    }
  }
  return SeparationFamily(std::move(out));
}

namespace {

FamilyReport verify_impl(const SeparationFamily& fam, const FamilyVerifyOptions& opts) {
  FamilyReport rep;
  const auto& items = fam.items();
  const int n = static_cast<int>(items.size());
  std::unordered_set<Separation, SeparationHash> present(items.begin(), items.end());
  for (int i = 0; i < n; ++i) {
    rep.max_order = std::max(rep.max_order, items[static_cast<size_t>(i)].order());
    if (rep.symmetric && !present.count(items[static_cast<size_t>(i)].flip())) {
      rep.symmetric = false;
      rep.missing_flip = i;
    }
  }
  for (int i = 0; i < n && rep.nested; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!sep_nested(items[static_cast<size_t>(i)], items[static_cast<size_t>(j)])) {
        rep.nested = false;
        rep.crossing = std::make_pair(i, j);
        break;
      }

  // Maximal chains are the source-to-sink paths of the covering relation.
  std::vector<std::vector<char>> less(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) less[static_cast<size_t>(i)][static_cast<size_t>(j)] = sep_less(items[static_cast<size_t>(i)], items[static_cast<size_t>(j)]);
  std::vector<std::vector<int>> cover(static_cast<size_t>(n));
  std::vector<char> has_lower(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!less[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
      bool covers = true;
      for (int k = 0; k < n && covers; ++k)
        if (less[static_cast<size_t>(i)][static_cast<size_t>(k)] && less[static_cast<size_t>(k)][static_cast<size_t>(j)]) covers = false;
      if (covers) {
        cover[static_cast<size_t>(i)].push_back(j);
        has_lower[static_cast<size_t>(j)] = 1;
      }
    }
  std::vector<int> path;
  auto emit = [&]() {
    ChainInterval ci;
    ci.chain = path;
    ci.interval = items[static_cast<size_t>(path.front())].s | items[static_cast<size_t>(path.front())].z;
    for (int idx : path) ci.interval &= items[static_cast<size_t>(idx)].s | items[static_cast<size_t>(idx)].z;
    rep.longest_chain = std::max(rep.longest_chain, path.size());
    rep.chains.push_back(std::move(ci));
  };
  auto walk = [&](auto&& self, int v) -> void {
    if (rep.chains.size() >= opts.max_chains) {
      rep.chains_truncated = true;
      return;
    }
    path.push_back(v);
    if (cover[static_cast<size_t>(v)].empty())
      emit();
    else
      for (int w : cover[static_cast<size_t>(v)]) self(self, w);
    path.pop_back();
  };
  for (int i = 0; i < n; ++i)
    if (!has_lower[static_cast<size_t>(i)]) walk(walk, i);
  return rep;
}

}  // namespace

FamilyReport family_verify(const SeparationFamily& fam, const FamilyVerifyOptions& opts) {
  return verify_impl(fam, opts);
}

FamilyReport family_verify(SeparationFamily& fam, const FamilyVerifyOptions& opts) {
  FamilyReport rep = verify_impl(fam, opts);
  fam.mark_verified(rep.symmetric, rep.nested);
  return rep;
}

std::vector<Separation> enumerate_tight(const Graph& g, int k, const TightOptions& opts) {
  if (k < 0) throw InputError("order bound must be nonnegative");
  if (k > opts.max_order)
    throw BudgetExceeded("tight enumeration order " + std::to_string(k) + " exceeds the budget of " +
                         std::to_string(opts.max_order));
  const int n = g.num_vertices();
  std::vector<Separation> out;
  long examined = 0;
  std::vector<int> pick;
  auto visit = [&]() {
    if (++examined > opts.separator_budget) throw BudgetExceeded("tight enumeration exceeded its separator budget");
    const VertexSet s = VertexSet::from_indices(n, pick);
    const auto comps = components_outside(g, s);
    const int r = static_cast<int>(comps.size());
    if (r < 2) return;
    if (r > 24) throw BudgetExceeded("too many components to split around one separator");
    std::vector<char> full(static_cast<size_t>(r), 0);
    int nfull = 0;
    for (int i = 0; i < r; ++i) {
      full[static_cast<size_t>(i)] = comps[static_cast<size_t>(i)].neighborhood == s;
      nfull += full[static_cast<size_t>(i)];
    }
    if (nfull < 2) return;
    for (unsigned long mask = 1; mask + 1 < (1ul << r); ++mask) {
      bool full_y = false;
      bool full_z = false;
      VertexSet y(n);
      for (int i = 0; i < r; ++i) {
        if (mask >> i & 1ul) {
          y |= comps[static_cast<size_t>(i)].vertices;
          full_y = full_y || full[static_cast<size_t>(i)];
        } else {
          full_z = full_z || full[static_cast<size_t>(i)];
        }
      }
      if (!full_y || !full_z) continue;
      out.push_back({y, s, g.all_vertices() - s - y});
    }
  };
  auto choose = [&](auto&& self, int start, int left) -> void {
    visit();
    if (left == 0) return;
    for (int v = start; v < n; ++v) {
      pick.push_back(v);
      self(self, v + 1, left - 1);
      pick.pop_back();
    }
  };
  choose(choose, 0, std::min(k, n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nestree
