#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nestree/cayley.hpp"
#include "nestree/graph.hpp"
#include "nestree/symmetry.hpp"

namespace nestree {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph cube_graph();
// K4 minus the edge 2-3: u=0, v=1 are the degree-3 vertices.
Graph diamond_graph();
// Vertex (i,j) has id i*cols + j.
Graph grid_graph(int rows, int cols);
// Grid plus a 4-cycle through its corners drawn around the outside; planar
// and 3-connected for rows, cols >= 3.
Graph framed_grid(int rows, int cols);

struct CorpusInstance {
  std::string name;
  Graph graph;
  std::optional<LabeledBall> ball;
  std::vector<int> edge_generator;                    // per edge, when labeled
  std::map<std::string, std::vector<EdgeSet>> cycles;  // named cycle families
  std::map<std::string, Action> actions;
};

// C5 x P_{n+2}: layer i in 0..n+1 holds ids 5i..5i+4. Cycles "red" are the
// layers 1..n; actions "aut" (rotation, reflection, layer reversal) and
// "shift" (aut plus the partial map layer i -> i+1 on layers 0..n).
CorpusInstance strip(int n);

// `count` framed grids joined in a star by bridges from distinct vertices of
// grid 0. Grid q holds ids q*rows*cols + ...
CorpusInstance grid_of_grids(int count, int rows, int cols);

const char* fig1_presentation();
const char* fig2_presentation();

CorpusInstance cayley_instance(const std::string& name, const Presentation& p, int radius);

// The union of the a-squares lying completely in the radius-r ball, with
// cycles "a-squares" and actions "aut" (full automorphism group) and
// "translations" (partial translations of the ball cut down to it).
CorpusInstance fig1_interior(int radius = 6);

// Spanning tree plus random edges kept while planar.
Graph random_planar(int n, int extra_edges, std::mt19937_64& rng);
// Random connected graph with n vertices and about m edges.
Graph random_connected(int n, int m, std::mt19937_64& rng);

// Pairwise nested cycles with proper separations: boundaries of randomly
// grown unions of faces, kept when they are cycles.
std::vector<EdgeSet> random_nested_cycles(const Graph& g, int attempts, std::mt19937_64& rng);

std::vector<std::string> builtin_names();
// Names: cube, k4, diamond, strip (param = n), grid, framed-grid (param =
// side), grid-of-grids, fig1-group, fig2-group (param = radius),
// fig1-interior. Throws InputError for anything else.
CorpusInstance builtin(const std::string& name, std::optional<int> param = std::nullopt);

// Instances carrying an action and a cycle family, used for corpus-wide
// checks.
std::vector<CorpusInstance> standard_corpus();

}  // namespace nestree
