#pragma once

#include <functional>
#include <vector>

#include "nestree/graph.hpp"
#include "oracles.hpp"

namespace oracle {

// Is `minor` (a graph on a subset X of host ids, containing g[X]) a minor of
// g with branch sets {x} plus components of g - X? Every assignment of the
// components to an adjacent member of X (or to none) is tried.
inline bool torso_is_minor(const Graph& g, const Graph& minor) {
  const int n = g.num_vertices();
  const auto a = adjacency_matrix(g);
  uint64_t x = 0;
  for (nestree::VertexId id : minor.ids()) x |= uint64_t{1} << g.index(id);
  const uint64_t all = (n == 64) ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  std::vector<uint64_t> comps;
  uint64_t left = all & ~x;
  while (left) {
    const uint64_t c = reach(a, all & ~x, __builtin_ctzll(left));
    comps.push_back(c);
    left &= ~c;
  }
  std::vector<std::vector<int>> choices(comps.size());
  for (size_t i = 0; i < comps.size(); ++i) {
    choices[i].push_back(-1);
    for (int v = 0; v < n; ++v) {
      if (!(x >> v & 1)) continue;
      bool touches = false;
      for (int w = 0; w < n && !touches; ++w) touches = (comps[i] >> w & 1) && a[v][w];
      if (touches) choices[i].push_back(v);
    }
  }
  std::vector<uint64_t> branch(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    if (x >> v & 1) branch[static_cast<size_t>(v)] = uint64_t{1} << v;
  auto realized = [&]() {
    for (const auto& [p, q] : minor.edges()) {
      const uint64_t bp = branch[static_cast<size_t>(g.index(minor.id(p)))];
      const uint64_t bq = branch[static_cast<size_t>(g.index(minor.id(q)))];
      bool hit = false;
      for (int u = 0; u < n && !hit; ++u)
        if (bp >> u & 1)
          for (int w = 0; w < n; ++w)
            if ((bq >> w & 1) && a[u][w]) {
              hit = true;
              break;
            }
      if (!hit) return false;
    }
    return true;
  };
  std::function<bool(size_t)> go = [&](size_t i) -> bool {
    if (i == comps.size()) return realized();
    for (int v : choices[i]) {
      if (v >= 0) branch[static_cast<size_t>(v)] |= comps[i];
      const bool ok = go(i + 1);
      if (v >= 0) branch[static_cast<size_t>(v)] &= ~comps[i];
      if (ok) return true;
    }
    return false;
  };
  return go(0);
}

}  // namespace oracle
