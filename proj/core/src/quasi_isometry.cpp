#include "nestree/quasi_isometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nestree/error.hpp"

namespace nestree {

namespace {

void require_total(const std::vector<int>& f, const Graph& g, const Graph& h) {
  if (static_cast<int>(f.size()) != g.num_vertices()) throw InputError("vertex map is not total");
  for (int w : f)
    if (w < 0 || w >= h.num_vertices()) throw InputError("vertex map leaves the target graph");
}

constexpr double kInf = std::numeric_limits<double>::infinity();

double as_distance(int d) { return d == kUnreachable ? kInf : d; }

double image_cover_radius(const std::vector<int>& f, const Graph& h) {
  VertexSet img(h.num_vertices());
  for (int w : f) img.set(w);
  if (img.empty()) return h.num_vertices() == 0 ? 0 : kInf;
  const auto d = bfs_from_set(h, img);
  double c = 0;
  for (int x : d) c = std::max(c, as_distance(x));
  return c;
}

}  // namespace

bool qi_check(const std::vector<int>& f, const Graph& g, const Graph& h, double lambda, double eps, double c) {
  require_total(f, g, h);
  if (lambda <= 0) throw InputError("lambda must be positive");
  const DistanceMatrix dg(g);
  const DistanceMatrix dh(h);
  const int n = g.num_vertices();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const double a = as_distance(dg(x, y));
      const double b = as_distance(dh(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]));
      if (std::isinf(a) || std::isinf(b)) {
        if (std::isinf(a) != std::isinf(b)) return false;
        continue;
      }
      if (a / lambda - eps > b || b > lambda * a + eps) return false;
    }
  return image_cover_radius(f, h) <= c;
}

QiConstants fit_qi_constants(const std::vector<int>& f, const Graph& g, const Graph& h) {
  require_total(f, g, h);
  const DistanceMatrix dg(g);
  const DistanceMatrix dh(h);
  const int n = g.num_vertices();
  QiConstants out;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const double a = as_distance(dg(x, y));
      const double b = as_distance(dh(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]));
      if (std::isinf(a) && std::isinf(b)) continue;
      out.epsilon = std::max(out.epsilon, std::isinf(a) || std::isinf(b) ? kInf : std::abs(a - b));
    }
  out.c = image_cover_radius(f, h);
  return out;
}

std::vector<int> nearest_projection(const Graph& g, const VertexSet& target) {
  const int n = g.num_vertices();
  std::vector<int> owner(static_cast<size_t>(n), -1);
  std::vector<int> dist(static_cast<size_t>(n), kUnreachable);
  std::vector<int> frontier;
  target.for_each([&](int v) {
    owner[static_cast<size_t>(v)] = v;
    dist[static_cast<size_t>(v)] = 0;
    frontier.push_back(v);
  });
  // Layered BFS; within a layer the smallest owner wins.
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int u : frontier)
      for (int w : g.neighbors(u)) {
        if (dist[static_cast<size_t>(w)] == kUnreachable) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
          owner[static_cast<size_t>(w)] = owner[static_cast<size_t>(u)];
          next.push_back(w);
        } else if (dist[static_cast<size_t>(w)] == dist[static_cast<size_t>(u)] + 1) {
          owner[static_cast<size_t>(w)] = std::min(owner[static_cast<size_t>(w)], owner[static_cast<size_t>(u)]);
        }
      }
    frontier = std::move(next);
  }
  return owner;
}

PartInequalityReport connected_parts_inequality(const TreeDecomposition& td, int k) {
  if (k < 0) throw InputError("fattening radius must be nonnegative");
  PartInequalityReport rep;
  rep.k = k;
  const long kk = std::max(k, 1);
  const Graph& g = td.host;
  for (int t = 0; t < td.num_nodes() && rep.holds; ++t) {
    const VertexSet& bag = td.bags[static_cast<size_t>(t)];
    const VertexSet fat = ball_around(g, bag, k);
    const Graph part = g.induced(fat);
    const Graph tor = torso(td, t);
    const DistanceMatrix dp(part);
    const DistanceMatrix dt(tor);
    // Projection in part coordinates onto the bag, then to torso indices.
    VertexSet bag_in_part(part.num_vertices());
    bag.for_each([&](int v) { bag_in_part.set(*part.find(g.id(v))); });
    const auto pi = nearest_projection(part, bag_in_part);
    std::vector<int> to_torso(static_cast<size_t>(part.num_vertices()), -1);
    for (int u = 0; u < part.num_vertices(); ++u)
      if (pi[static_cast<size_t>(u)] >= 0) to_torso[static_cast<size_t>(u)] = tor.index(part.id(pi[static_cast<size_t>(u)]));
    for (int u = 0; u < part.num_vertices() && rep.holds; ++u)
      for (int v = u + 1; v < part.num_vertices(); ++v) {
        ++rep.pairs_checked;
        const long a = dp(u, v);
        const int pu = to_torso[static_cast<size_t>(u)];
        const int pv = to_torso[static_cast<size_t>(v)];
        const long b = pu < 0 || pv < 0 ? kUnreachable : dt(pu, pv);
        // a/k - 2 <= b <= (2k+1) a, kept in integers.
        const bool ok = a != kUnreachable && b != kUnreachable && a <= kk * (b + 2) && b <= (2 * kk + 1) * a;
        if (!ok) {
          rep.holds = false;
          rep.node = t;
          rep.witness = "node " + std::to_string(t) + ": vertices " + std::to_string(part.id(u)) + " and " +
                        std::to_string(part.id(v)) + " violate the projection bounds";
          break;
        }
      }
  }
  return rep;
}

}  // namespace nestree
