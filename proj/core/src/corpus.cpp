#include "nestree/corpus.hpp"

#include <algorithm>
#include <set>

#include "nestree/cyclespace.hpp"
#include "nestree/error.hpp"
#include "nestree/pipeline.hpp"
#include "nestree/planarity.hpp"
#include "nestree/separations.hpp"

namespace nestree {

Graph path_graph(int n) {
  if (n < 1) throw InputError("path needs at least one vertex");
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::with_vertices(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least three vertices");
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::with_vertices(n, e);
}

Graph complete_graph(int n) {
  if (n < 1) throw InputError("complete graph needs at least one vertex");
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::with_vertices(n, e);
}

Graph cube_graph() {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (!(v >> b & 1)) e.emplace_back(v, v | 1 << b);
  return Graph::with_vertices(8, e);
}

Graph diamond_graph() { return Graph::with_vertices(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InputError("grid sides must be positive");
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) e.emplace_back(i * cols + j, i * cols + j + 1);
      if (i + 1 < rows) e.emplace_back(i * cols + j, (i + 1) * cols + j);
    }
  return Graph::with_vertices(rows * cols, e);
}

Graph framed_grid(int rows, int cols) {
  if (rows < 3 || cols < 3) throw InputError("framed grid sides must be at least 3");
  const Graph g = grid_graph(rows, cols);
  const int c00 = 0;
  const int c01 = cols - 1;
  const int c11 = rows * cols - 1;
  const int c10 = (rows - 1) * cols;
  return g.with_added_edges({{c00, c01}, {c01, c11}, {c10, c11}, {c00, c10}});
}

namespace {

Action action_from(const Graph& g, std::vector<Permutation> gens, std::vector<PartialMap> partial = {}) {
  Action a{g, std::move(gens), std::move(partial)};
  validate(a);
  return a;
}

}  // namespace

CorpusInstance strip(int n) {
  if (n < 1) throw InputError("strip needs at least one red cycle");
  const int layers = n + 2;
  const int total = 5 * layers;
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < layers; ++i)
    for (int j = 0; j < 5; ++j) {
      e.emplace_back(5 * i + j, 5 * i + (j + 1) % 5);
      if (i + 1 < layers) e.emplace_back(5 * i + j, 5 * (i + 1) + j);
    }
  CorpusInstance ci;
  ci.name = "strip" + std::to_string(n);
  ci.graph = Graph::with_vertices(total, e);
  auto& red = ci.cycles["red"];
  for (int i = 1; i <= n; ++i) {
    std::vector<VertexId> ids;
    for (int j = 0; j < 5; ++j) ids.push_back(5 * i + j);
    red.push_back(cycle_from_ids(ci.graph, ids));
  }
  Permutation rot(static_cast<size_t>(total)), refl(static_cast<size_t>(total)), rev(static_cast<size_t>(total));
  PartialMap shift{std::vector<int>(static_cast<size_t>(total), -1)};
  for (int i = 0; i < layers; ++i)
    for (int j = 0; j < 5; ++j) {
      const size_t v = static_cast<size_t>(5 * i + j);
      rot[v] = 5 * i + (j + 1) % 5;
      refl[v] = 5 * i + (5 - j) % 5;
      rev[v] = 5 * (layers - 1 - i) + j;
      if (i + 1 < layers) shift.image[v] = 5 * (i + 1) + j;
    }
  ci.actions["aut"] = action_from(ci.graph, {rot, refl, rev});
  ci.actions["shift"] = action_from(ci.graph, {rot, refl, rev}, {shift});
  return ci;
}

CorpusInstance grid_of_grids(int count, int rows, int cols) {
  if (count < 1) throw InputError("grid-of-grids needs at least one grid");
  const int size = rows * cols;
  if (count - 1 > size) throw InputError("too many grids for the hub grid's vertices");
  const Graph fg = framed_grid(rows, cols);
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int q = 0; q < count; ++q)
    for (const auto& [u, v] : fg.edges()) e.emplace_back(q * size + u, q * size + v);
  // Bridge i joins vertex i-1 of the hub grid to the centre of grid i.
  const int centre = (rows / 2) * cols + cols / 2;
  for (int q = 1; q < count; ++q) e.emplace_back(q - 1, q * size + centre);
  CorpusInstance ci;
  ci.name = "grid-of-grids";
  ci.graph = Graph::with_vertices(count * size, e);
  ci.actions["trivial"] = Action{ci.graph, {}, {}};
  return ci;
}

const char* fig1_presentation() { return "<a,b,c | a^4, b^2, c^2, abab, acac>"; }
const char* fig2_presentation() { return "<a,b,c | abAB, c^2>"; }

CorpusInstance cayley_instance(const std::string& name, const Presentation& p, int radius) {
  CorpusInstance ci;
  ci.name = name;
  ci.ball = cayley_ball(p, radius);
  ci.graph = ci.ball->graph;
  ci.edge_generator = ci.ball->edge_generator;
  std::vector<PartialMap> maps;
  for (const auto& t : partial_translations(*ci.ball))
    if (t.element != 0) maps.push_back(t.map);
  ci.actions["translations"] = action_from(ci.graph, {}, maps);
  return ci;
}

CorpusInstance fig1_interior(int radius) {
  const CorpusInstance full = cayley_instance("fig1-group", Presentation::parse(fig1_presentation()), radius);
  const LabeledBall& b = *full.ball;
  const int n = b.graph.num_vertices();
  std::set<std::vector<int>> squares;
  for (int v = 0; v < n; ++v) {
    std::vector<int> sq{v};
    int w = v;
    bool closed = true;
    for (int k = 0; k < 4 && closed; ++k) {
      w = b.step[static_cast<size_t>(w)][0];
      if (w < 0) closed = false;
      else if (k < 3) sq.push_back(w);
    }
    if (!closed || w != v) continue;
    std::vector<int> key = sq;
    std::sort(key.begin(), key.end());
    if (squares.count(key)) continue;
    squares.insert(key);
  }
  VertexSet x(n);
  for (const auto& sq : squares)
    for (int v : sq) x.set(v);
  CorpusInstance ci;
  ci.name = "fig1-interior";
  ci.ball = b;
  ci.graph = b.graph.induced(x);
  const auto host_edge = b.graph.edge_map_from(ci.graph);
  for (int he : host_edge) ci.edge_generator.push_back(b.edge_generator[static_cast<size_t>(he)]);
  auto& sqs = ci.cycles["a-squares"];
  for (const auto& key : squares) {
    // Walk the square again in a-order.
    std::vector<VertexId> ids;
    int w = key.front();
    for (int k = 0; k < 4; ++k) {
      ids.push_back(b.graph.id(w));
      w = b.step[static_cast<size_t>(w)][0];
    }
    sqs.push_back(cycle_from_ids(ci.graph, ids));
  }
  ci.actions["aut"] = automorphism_group(ci.graph).action;
  ci.actions["translations"] = restrict_action(full.actions.at("translations"), x, ci.graph);
  return ci;
}

Graph random_connected(int n, int m, std::mt19937_64& rng) {
  if (n < 1) throw InputError("random graph needs a vertex");
  std::set<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(rng() % static_cast<uint64_t>(v));
    e.emplace(u, v);
  }
  const long cap = static_cast<long>(n) * (n - 1) / 2;
  const long target = std::min<long>(m, cap);
  while (static_cast<long>(e.size()) < target) {
    int u = static_cast<int>(rng() % static_cast<uint64_t>(n));
    int v = static_cast<int>(rng() % static_cast<uint64_t>(n));
    if (u == v) continue;
    e.emplace(std::min(u, v), std::max(u, v));
  }
  return Graph::with_vertices(n, {e.begin(), e.end()});
}

Graph random_planar(int n, int extra_edges, std::mt19937_64& rng) {
  Graph g = random_connected(n, n - 1, rng);
  for (int k = 0; k < extra_edges; ++k) {
    const int u = static_cast<int>(rng() % static_cast<uint64_t>(n));
    const int v = static_cast<int>(rng() % static_cast<uint64_t>(n));
    if (u == v || g.adjacent(u, v)) continue;
    Graph h = g.with_added_edges({{std::min(u, v), std::max(u, v)}});
    if (is_planar(h)) g = std::move(h);
  }
  return g;
}

std::vector<EdgeSet> random_nested_cycles(const Graph& g, int attempts, std::mt19937_64& rng) {
  const EmbedResult er = planar_embed(g);
  if (!er.embedding) throw InputError("graph is not planar");
  const RotationSystem& emb = *er.embedding;
  const auto fs = faces(emb);
  const int nf = static_cast<int>(fs.size());
  std::vector<int> face_of_dart(static_cast<size_t>(2 * g.num_edges()), -1);
  for (int f = 0; f < nf; ++f)
    for (int d : fs[static_cast<size_t>(f)].darts) face_of_dart[static_cast<size_t>(d)] = f;
  std::vector<EdgeSet> out;
  std::vector<Separation> seps;
  std::set<EdgeSet> seen;
  for (int a = 0; a < attempts && nf > 1; ++a) {
    std::vector<char> in(static_cast<size_t>(nf), 0);
    const int start = static_cast<int>(rng() % static_cast<uint64_t>(nf));
    in[static_cast<size_t>(start)] = 1;
    const int steps = static_cast<int>(rng() % static_cast<uint64_t>(std::max(1, nf / 2)));
    for (int s = 0; s < steps; ++s) {
      std::vector<int> frontier;
      for (int e = 0; e < g.num_edges(); ++e) {
        const int f1 = face_of_dart[static_cast<size_t>(2 * e)];
        const int f2 = face_of_dart[static_cast<size_t>(2 * e + 1)];
        if (in[static_cast<size_t>(f1)] != in[static_cast<size_t>(f2)]) frontier.push_back(in[static_cast<size_t>(f1)] ? f2 : f1);
      }
      if (frontier.empty()) break;
      in[static_cast<size_t>(frontier[rng() % frontier.size()])] = 1;
    }
    EdgeSet boundary = g.empty_edge_set();
    for (int f = 0; f < nf; ++f)
      if (in[static_cast<size_t>(f)]) boundary ^= fs[static_cast<size_t>(f)].edges;
    if (boundary.empty() || !is_cycle(g, boundary) || seen.count(boundary)) continue;
    const CycleSeparations cs = separation_from_cycle(emb, boundary);
    if (!cs.proper) continue;
    const bool nested = std::all_of(seps.begin(), seps.end(), [&](const Separation& s) { return sep_nested(s, cs.forward); });
    if (!nested) continue;
    seen.insert(boundary);
    seps.push_back(cs.forward);
    out.push_back(boundary);
  }
  return out;
}

std::vector<std::string> builtin_names() {
  return {"cube", "k4", "diamond", "strip", "grid", "framed-grid", "grid-of-grids", "fig1-group", "fig2-group",
          "fig1-interior"};
}

namespace {

CorpusInstance simple_instance(const std::string& name, const Graph& g) {
  CorpusInstance ci;
  ci.name = name;
  ci.graph = g;
  ci.actions["aut"] = automorphism_group(g).action;
  return ci;
}

}  // namespace

CorpusInstance builtin(const std::string& name, std::optional<int> param) {
  if (name == "cube") return simple_instance(name, cube_graph());
  if (name == "k4") return simple_instance(name, complete_graph(4));
  if (name == "diamond") return simple_instance(name, diamond_graph());
  if (name == "strip") return strip(param.value_or(5));
  if (name == "grid") {
    const int s = param.value_or(4);
    return simple_instance(name, grid_graph(s, s));
  }
  if (name == "framed-grid") {
    const int s = param.value_or(4);
    return simple_instance(name, framed_grid(s, s));
  }
  if (name == "grid-of-grids") return grid_of_grids(param.value_or(3), 4, 4);
  if (name == "fig1-group") return cayley_instance(name, Presentation::parse(fig1_presentation()), param.value_or(6));
  if (name == "fig2-group") return cayley_instance(name, Presentation::parse(fig2_presentation()), param.value_or(3));
  if (name == "fig1-interior") return fig1_interior(param.value_or(6));
  throw InputError("unknown builtin '" + name + "'");
}

std::vector<CorpusInstance> standard_corpus() {
  std::vector<CorpusInstance> out;
  out.push_back(builtin("cube"));
  out.push_back(builtin("k4"));
  out.push_back(builtin("diamond"));
  out.push_back(builtin("framed-grid", 4));
  CorpusInstance s = strip(5);
  s.cycles["extra"] = s.cycles.at("red");
  out.push_back(std::move(s));
  CorpusInstance f = fig1_interior(6);
  f.cycles["extra"] = f.cycles.at("a-squares");
  out.push_back(std::move(f));
  out.push_back(grid_of_grids(3, 4, 4));
  return out;
}

}  // namespace nestree
