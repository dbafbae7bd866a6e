#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nestree/graph.hpp"
#include "nestree/planarity.hpp"

namespace nestree {

// Oriented separation (Y, S, Z) of a host graph.
struct Separation {
  VertexSet y;
  VertexSet s;
  VertexSet z;

  int order() const { return s.count(); }
  Separation flip() const { return {z, s, y}; }
  bool proper() const { return y.any() && z.any(); }

  friend bool operator==(const Separation&, const Separation&) = default;
  friend bool operator<(const Separation& a, const Separation& b) {
    if (!(a.s == b.s)) return a.s < b.s;
    if (!(a.y == b.y)) return a.y < b.y;
    return a.z < b.z;
  }
};

struct SeparationHash {
  size_t operator()(const Separation& s) const {
    return s.y.hash() * 1000003u ^ s.s.hash() * 998244353u ^ s.z.hash();
  }
};

// Disjoint cover of V with no Y-Z edge.
bool is_separation(const Graph& g, const Separation& sep);
// Throws InputError with the failing condition.
void require_separation(const Graph& g, const Separation& sep);
// Y := V - (S u Z).
Separation separation_from_sides(const Graph& g, const VertexSet& s, const VertexSet& z);

struct CycleSeparations {
  Separation forward;   // (side_a, V(C), side_b)
  Separation backward;  // (side_b, V(C), side_a)
  bool proper = false;
};

CycleSeparations separation_from_cycle(const RotationSystem& e, const EdgeSet& c);

// Some component of G[Y] and some component of G[Z] both have neighborhood S.
bool is_tight(const Graph& g, const Separation& sep);

// Y <= Y' and Z' <= Z. Throws InputError on host mismatch.
bool sep_leq(const Separation& a, const Separation& b);
bool sep_less(const Separation& a, const Separation& b);
// a is comparable with b or with its flip.
bool sep_nested(const Separation& a, const Separation& b);

// Ordered family over one host. The flags are only set by verify().
class SeparationFamily {
 public:
  SeparationFamily() = default;
  explicit SeparationFamily(std::vector<Separation> items) : items_(std::move(items)) {}

  const std::vector<Separation>& items() const { return items_; }
  size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const Separation& operator[](size_t i) const { return items_[i]; }
  void add(Separation s);

  bool symmetric_verified() const { return symmetric_; }
  bool nested_verified() const { return nested_; }
  void mark_verified(bool symmetric, bool nested) {
    symmetric_ = symmetric;
    nested_ = nested;
  }

  // Adds missing flips and removes duplicates, keeping first occurrences.
  static SeparationFamily symmetric_closure(const std::vector<Separation>& seps);

 private:
  std::vector<Separation> items_;
  bool symmetric_ = false;
  bool nested_ = false;
};

struct ChainInterval {
  std::vector<int> chain;  // family indices, strictly increasing under <=
  VertexSet interval;      // intersection of S_i u Z_i along the chain
};

struct FamilyReport {
  bool symmetric = true;
  bool nested = true;
  int max_order = 0;
  int missing_flip = -1;                           // index lacking its flip
  std::optional<std::pair<int, int>> crossing;     // first non-nested pair
  std::vector<ChainInterval> chains;               // maximal chains
  bool chains_truncated = false;
  size_t longest_chain = 0;
};

struct FamilyVerifyOptions {
  size_t max_chains = 20000;
};

// Also caches the verdict on the family flags.
FamilyReport family_verify(SeparationFamily& fam, const FamilyVerifyOptions& opts = {});
FamilyReport family_verify(const SeparationFamily& fam, const FamilyVerifyOptions& opts = {});

struct TightOptions {
  int max_order = 4;
  long separator_budget = 5'000'000;
};

// All tight separations of order <= k, both orientations, in family order
// (separator, then Y). Throws BudgetExceeded when k exceeds opts.max_order or
// too many separators would be examined.
std::vector<Separation> enumerate_tight(const Graph& g, int k, const TightOptions& opts = {});

}  // namespace nestree
