#pragma once

#include <span>
#include <string>
#include <vector>

#include "nestree/graph.hpp"

namespace nestree {

// Cycles are edge sets over a host graph.

bool is_even(const Graph& g, const EdgeSet& s);
// Connected, nonempty, every vertex of degree 0 or 2.
bool is_cycle(const Graph& g, const EdgeSet& s);
VertexSet cycle_vertices(const Graph& g, const EdgeSet& c);
// Vertex indices around the cycle, starting at its smallest vertex and
// continuing toward the smaller of its two neighbors. Throws InputError if c
// is not a cycle.
std::vector<int> cycle_sequence(const Graph& g, const EdgeSet& c);
// Edge set of the closed walk through the given vertex indices. Throws
// InputError when consecutive vertices are not adjacent.
EdgeSet closed_walk_edges(const Graph& g, std::span<const int> walk);
// Same by identifiers; the walk closes on its own, do not repeat the start.
EdgeSet cycle_from_ids(const Graph& g, std::span<const VertexId> ids);

// Componentwise parity. Throws InputError on host mismatch or an empty list.
EdgeSet z2_sum(std::span<const EdgeSet> sets);
EdgeSet z2_sum(std::span<const EdgeSet> sets, int universe);
// Z2-sum of the members with odd coefficient.
EdgeSet z_sum_to_z2(std::span<const long> coeffs, std::span<const EdgeSet> cycles);

// |E| - |V| + #components.
int cycle_space_dimension(const Graph& g);

// Fundamental cycles of a BFS spanning forest rooted at the smallest vertex of
// each component, one per non-tree edge in edge order.
std::vector<EdgeSet> cycle_basis(const Graph& g);

// Incremental GF(2) elimination. Pivot of a row is its lowest edge index.
class Gf2Basis {
 public:
  explicit Gf2Basis(int universe) : universe_(universe) {}

  // Returns true when v was independent of the rows inserted so far.
  bool insert(const EdgeSet& v, int tag = -1);
  int rank() const { return static_cast<int>(rows_.size()); }
  // Tags of inserted vectors whose sum is v, or nothing when v is outside the
  // span.
  bool represent(const EdgeSet& v, std::vector<int>* tags) const;

 private:
  struct Row {
    EdgeSet vec;
    std::vector<uint64_t> combo;  // bitset over tags
  };
  void reduce(EdgeSet& v, std::vector<uint64_t>& combo) const;

  int universe_;
  int tag_words_ = 0;
  std::vector<Row> rows_;
};

int gf2_rank(std::span<const EdgeSet> fam, int universe);

struct SpanResult {
  bool in_span = false;
  bool target_even = true;
  std::vector<int> combination;  // indices into fam, ascending
  std::string reason;
};

SpanResult spans(const Graph& g, std::span<const EdgeSet> fam, const EdgeSet& target);

struct GenerationReport {
  bool generates = false;
  int rank = 0;
  int dimension = 0;
};

// Throws InputError when some member is not even.
GenerationReport generates_cycle_space(std::span<const EdgeSet> fam, const Graph& g);

struct ShortCycleOptions {
  long step_budget = 20'000'000;
};

// All simple cycles of length <= max_length, ordered by length and then by
// cycle_sequence. Throws BudgetExceeded when the search exceeds the budget.
std::vector<EdgeSet> short_cycles(const Graph& g, int max_length, const ShortCycleOptions& opts = {});

int girth(const Graph& g);  // 0 for forests

}  // namespace nestree
