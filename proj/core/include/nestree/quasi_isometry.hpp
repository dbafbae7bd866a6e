#pragma once

#include <string>
#include <vector>

#include "nestree/graph.hpp"
#include "nestree/treedecomp.hpp"

namespace nestree {

struct QiConstants {
  double lambda = 1;
  double epsilon = 0;
  double c = 0;
};

// f maps vertex indices of g to vertex indices of h. Checks, over all pairs,
// d_G/lambda - eps <= d_H(f x, f y) <= lambda d_G + eps and that every vertex
// of h lies within c of the image. Throws InputError when f is not total.
bool qi_check(const std::vector<int>& f, const Graph& g, const Graph& h, double lambda, double eps, double c);

// Lexicographically minimal (lambda, eps, c). Finite graphs always admit
// lambda = 1; eps and c are infinite when f joins or splits components.
QiConstants fit_qi_constants(const std::vector<int>& f, const Graph& g, const Graph& h);

// For every vertex of g the nearest member of `target`, ties to the smallest
// index; -1 when unreachable.
std::vector<int> nearest_projection(const Graph& g, const VertexSet& target);

struct PartInequalityReport {
  bool holds = true;
  int k = 0;                 // fattening radius used
  long pairs_checked = 0;
  int node = -1;             // first failing node
  std::string witness;
};

// For every node t: V'_t = B_k(V_t), pi the nearest projection onto V_t and
// the check (1/k') d_{G[V'_t]}(u,v) - 2 <= d_torso(pi u, pi v) <=
// (2k'+1) d_{G[V'_t]}(u,v) with k' = max(k, 1).
PartInequalityReport connected_parts_inequality(const TreeDecomposition& td, int k);

}  // namespace nestree
