#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nestree/graph.hpp"
#include "nestree/vertex_map.hpp"

namespace nestree {

struct GeneratorSymbol {
  char symbol = 'a';
  bool involution = false;  // x^2 = 1; drawn as a single undirected edge
};

struct Letter {
  int generator = 0;
  bool inverse = false;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// Finite group presentation. Relators are freely reduced, nonempty, and never
// mention the inverse of an involution.
//
// Text grammar (whitespace ignored):
//   gens: a(4) b(2) c ; rels: abab, acac, aBAb, a^-2 c^3
// `x(2)` flags an involution, `x(n)` for n >= 3 adds the relator x^n, an
// uppercase letter is the inverse of its lowercase generator. The bracket form
//   <a,b,c | a^4, b^2, c^2, abab, acac>
// is accepted too; there a relator x^2 on a single generator marks x as an
// involution.
struct Presentation {
  std::vector<GeneratorSymbol> generators;
  std::vector<Word> relators;

  static Presentation parse(std::string_view text);
  std::string to_string() const;
  int max_relator_length() const;
  std::string word_to_string(const Word& w) const;
};

struct CayleyOptions {
  int vertex_cap = 50000;
};

// Ball of the Cayley graph around the identity. Vertex ids are 0..n-1 in BFS
// order (0 is the identity); every vertex index equals its id.
struct LabeledBall {
  Presentation presentation;
  Graph graph;
  std::vector<int> edge_generator;  // generator index per edge
  VertexId center = 0;
  int radius = 0;
  // Vertices at distance <= exact_radius are in bijection with group elements.
  int exact_radius = 0;
  // The coset table closed: the group is finite and fully enumerated.
  bool complete = false;
  std::vector<int> depth;    // distance from the identity
  std::vector<Word> words;   // a geodesic word per vertex
  // right-multiplication table: step[v][2g + inv] or -1
  std::vector<std::vector<int>> step;

  char edge_symbol(int e) const {
    return presentation.generators[static_cast<size_t>(edge_generator[static_cast<size_t>(e)])].symbol;
  }
  int follow(int from, const Word& w) const;  // -1 when the path leaves the ball
  bool exact(int v) const { return depth[static_cast<size_t>(v)] <= exact_radius; }
};

// Truncated Todd-Coxeter enumeration. Throws BudgetExceeded when more than
// `vertex_cap` cosets would be created.
LabeledBall cayley_ball(const Presentation& p, int radius, const CayleyOptions& opts = {});

struct PartialTranslation {
  int element = 0;  // vertex of the translating group element
  PartialMap map;   // v -> element * v on the exact region
};

// One label-preserving injective map per exactly identified element g with
// |g| <= exact_radius, in vertex order (identity first). The map sends v to
// g*v wherever both lie in the exact region. Empty when exact_radius is 0.
std::vector<PartialTranslation> partial_translations(const LabeledBall& b);

// Induced subgraph of the ball on vertices reachable from the center using
// only the given generators.
Graph coset_subgraph(const LabeledBall& b, const std::vector<int>& generators);

}  // namespace nestree
