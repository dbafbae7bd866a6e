#pragma once

#include <vector>

namespace nestree {

// Vertex maps are stored by vertex index of their host graph.

// Total bijection on V(host): image[v] for every v.
using Permutation = std::vector<int>;

// Injective map defined on a subset of V(host); image[v] == -1 outside the
// domain.
struct PartialMap {
  std::vector<int> image;

  bool defined(int v) const { return image[static_cast<size_t>(v)] >= 0; }
  int operator()(int v) const { return image[static_cast<size_t>(v)]; }
  int domain_size() const {
    int n = 0;
    for (int w : image) n += w >= 0 ? 1 : 0;
    return n;
  }
  bool total() const { return domain_size() == static_cast<int>(image.size()); }
};

}  // namespace nestree
