#include "nestree/planarity.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "nestree/cyclespace.hpp"
#include "nestree/error.hpp"

namespace nestree {

RotationSystem::RotationSystem(Graph g, std::vector<std::vector<int>> rotation)
    : graph_(std::move(g)), rotation_(std::move(rotation)) {
  const int n = graph_.num_vertices();
  if (static_cast<int>(rotation_.size()) != n) throw InputError("rotation system does not list every vertex");
  position_.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    const auto ie = graph_.incident_edges(v);
    const auto& rot = rotation_[static_cast<size_t>(v)];
    if (rot.size() != ie.size())
      throw InputError("rotation at vertex " + std::to_string(graph_.id(v)) + " has the wrong length");
    auto& pos = position_[static_cast<size_t>(v)];
    pos.assign(ie.size(), -1);
    for (size_t slot = 0; slot < rot.size(); ++slot) {
      const auto it = std::find(ie.begin(), ie.end(), rot[slot]);
      if (it == ie.end())
        throw InputError("rotation at vertex " + std::to_string(graph_.id(v)) + " lists a non-incident edge");
      auto& p = pos[static_cast<size_t>(it - ie.begin())];
      if (p >= 0) throw InputError("rotation at vertex " + std::to_string(graph_.id(v)) + " repeats an edge");
      p = static_cast<int>(slot);
    }
  }
}

namespace {

int slot_of(const Graph& g, const std::vector<int>& pos, int v, int e) {
  const auto ie = g.incident_edges(v);
  const auto it = std::find(ie.begin(), ie.end(), e);
  if (it == ie.end()) throw InputError("edge is not incident to vertex");
  return pos[static_cast<size_t>(it - ie.begin())];
}

}  // namespace

int RotationSystem::next_edge(int v, int e) const {
  const auto& rot = rotation_[static_cast<size_t>(v)];
  const int s = slot_of(graph_, position_[static_cast<size_t>(v)], v, e);
  return rot[(static_cast<size_t>(s) + 1) % rot.size()];
}

int RotationSystem::prev_edge(int v, int e) const {
  const auto& rot = rotation_[static_cast<size_t>(v)];
  const int s = slot_of(graph_, position_[static_cast<size_t>(v)], v, e);
  return rot[(static_cast<size_t>(s) + rot.size() - 1) % rot.size()];
}

int RotationSystem::next_dart(int d) const {
  const int v = dart_head(graph_, d);
  const int e = next_edge(v, d / 2);
  return graph_.edge(e).first == v ? 2 * e : 2 * e + 1;
}

RotationSystem RotationSystem::mirror() const {
  auto rot = rotation_;
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return RotationSystem(graph_, std::move(rot));
}

RotationSystem RotationSystem::restrict_to(const VertexSet& keep) const {
  Graph sub = graph_.induced(keep);
  const std::vector<int> host_of_sub = graph_.edge_map_from(sub);
  std::vector<int> sub_of_host(static_cast<size_t>(graph_.num_edges()), -1);
  for (size_t i = 0; i < host_of_sub.size(); ++i) sub_of_host[static_cast<size_t>(host_of_sub[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> rot(static_cast<size_t>(sub.num_vertices()));
  for (int sv = 0; sv < sub.num_vertices(); ++sv) {
    const int hv = graph_.index(sub.id(sv));
    for (int e : rotation_[static_cast<size_t>(hv)]) {
      const int se = sub_of_host[static_cast<size_t>(e)];
      if (se >= 0) rot[static_cast<size_t>(sv)].push_back(se);
    }
  }
  return RotationSystem(std::move(sub), std::move(rot));
}

std::vector<FaceWalk> faces(const RotationSystem& e) {
  const Graph& g = e.graph();
  const int darts = 2 * g.num_edges();
  std::vector<char> seen(static_cast<size_t>(darts), 0);
  std::vector<FaceWalk> out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0) {
      FaceWalk f;
      f.edges = EdgeSet(g.num_edges());
      f.vertices.push_back(v);
      out.push_back(std::move(f));
    }
  for (int d0 = 0; d0 < darts; ++d0) {
    if (seen[static_cast<size_t>(d0)]) continue;
    FaceWalk f;
    f.edges = EdgeSet(g.num_edges());
    int d = d0;
    do {
      seen[static_cast<size_t>(d)] = 1;
      f.darts.push_back(d);
      f.vertices.push_back(RotationSystem::dart_tail(g, d));
      f.edges.flip(d / 2);
      d = e.next_dart(d);
    } while (d != d0);
    std::vector<int> vs = f.vertices;
    std::sort(vs.begin(), vs.end());
    const bool distinct = std::adjacent_find(vs.begin(), vs.end()) == vs.end();
    f.is_cycle = distinct && f.darts.size() >= 3 && f.edges.count() == static_cast<int>(f.darts.size());
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

// Left-right planarity state, following the Brandes formulation.
class LrPlanarity {
 public:
  explicit LrPlanarity(const Graph& g) : g_(g) {
    const int n = g.num_vertices();
    const int m = g.num_edges();
    height_.assign(static_cast<size_t>(n), -1);
    parent_edge_.assign(static_cast<size_t>(n), -1);
    src_.assign(static_cast<size_t>(m), -1);
    dst_.assign(static_cast<size_t>(m), -1);
    lowpt_.assign(static_cast<size_t>(m), 0);
    lowpt2_.assign(static_cast<size_t>(m), 0);
    nesting_.assign(static_cast<size_t>(m), 0);
    ref_.assign(static_cast<size_t>(m), -1);
    side_.assign(static_cast<size_t>(m), 1);
    lowpt_edge_.assign(static_cast<size_t>(m), -1);
    stack_bottom_.assign(static_cast<size_t>(m), 0);
    out_.resize(static_cast<size_t>(n));
  }

  std::optional<std::vector<std::vector<int>>> run() {
    const int n = g_.num_vertices();
    const int m = g_.num_edges();
    if (n > 2 && m > 3 * n - 6) return std::nullopt;
    for (int v = 0; v < n; ++v) {
      if (height_[static_cast<size_t>(v)] >= 0) continue;
      height_[static_cast<size_t>(v)] = 0;
      roots_.push_back(v);
      orient(v);
    }
    out_orig_ = out_;
    sort_out_edges();
    for (int r : roots_)
      if (!test(r)) return std::nullopt;
    for (int e = 0; e < m; ++e) nesting_[static_cast<size_t>(e)] *= sign(e);
    out_ = out_orig_;
    sort_out_edges();

    cw_.assign(static_cast<size_t>(n), {});
    ccw_.assign(static_cast<size_t>(n), {});
    leftmost_.assign(static_cast<size_t>(n), -1);
    left_ref_.assign(static_cast<size_t>(n), -1);
    right_ref_.assign(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
      int prev = -1;
      for (int e : out_[static_cast<size_t>(v)]) {
        const int w = dst_[static_cast<size_t>(e)];
        if (prev < 0)
          add_first_ever(v, w);
        else
          insert_cw_of(v, w, prev);
        prev = w;
      }
    }
    for (int r : roots_) embed(r);

    // Rotation lists follow counterclockwise successors from the leftmost
    // neighbor, which matches the face-tracing rule of RotationSystem.
    std::vector<std::vector<int>> rot(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      const int start = leftmost_[static_cast<size_t>(v)];
      if (start < 0) continue;
      int w = start;
      do {
        rot[static_cast<size_t>(v)].push_back(*g_.edge_index(v, w));
        w = ccw_[static_cast<size_t>(v)].at(w);
      } while (w != start);
    }
    return rot;
  }

 private:
  struct Interval {
    int low = -1;
    int high = -1;
    bool empty() const { return low < 0 && high < 0; }
  };
  struct ConflictPair {
    Interval left;
    Interval right;
    void swap() { std::swap(left, right); }
  };

  int lowpt(int e) const { return lowpt_[static_cast<size_t>(e)]; }
  bool conflicting(const Interval& i, int b) const { return !i.empty() && lowpt(i.high) > lowpt(b); }
  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt(p.right.low);
    if (p.right.empty()) return lowpt(p.left.low);
    return std::min(lowpt(p.left.low), lowpt(p.right.low));
  }

  void sort_out_edges() {
    for (auto& list : out_)
      std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
        return nesting_[static_cast<size_t>(a)] < nesting_[static_cast<size_t>(b)];
      });
  }

  void orient(int v) {
    const int e = parent_edge_[static_cast<size_t>(v)];
    const auto nb = g_.neighbors(v);
    const auto ie = g_.incident_edges(v);
    for (size_t i = 0; i < nb.size(); ++i) {
      const int w = nb[i];
      const int vw = ie[i];
      if (src_[static_cast<size_t>(vw)] >= 0) continue;
      src_[static_cast<size_t>(vw)] = v;
      dst_[static_cast<size_t>(vw)] = w;
      out_[static_cast<size_t>(v)].push_back(vw);
      lowpt_[static_cast<size_t>(vw)] = height_[static_cast<size_t>(v)];
      lowpt2_[static_cast<size_t>(vw)] = height_[static_cast<size_t>(v)];
      if (height_[static_cast<size_t>(w)] < 0) {
        parent_edge_[static_cast<size_t>(w)] = vw;
        height_[static_cast<size_t>(w)] = height_[static_cast<size_t>(v)] + 1;
        orient(w);
      } else {
        lowpt_[static_cast<size_t>(vw)] = height_[static_cast<size_t>(w)];
      }
      nesting_[static_cast<size_t>(vw)] = 2 * lowpt_[static_cast<size_t>(vw)];
      if (lowpt2_[static_cast<size_t>(vw)] < height_[static_cast<size_t>(v)]) nesting_[static_cast<size_t>(vw)] += 1;
      if (e >= 0) {
        auto& le = lowpt_[static_cast<size_t>(e)];
        auto& l2e = lowpt2_[static_cast<size_t>(e)];
        const int lvw = lowpt_[static_cast<size_t>(vw)];
        const int l2vw = lowpt2_[static_cast<size_t>(vw)];
        if (lvw < le) {
          l2e = std::min(le, l2vw);
          le = lvw;
        } else if (lvw > le) {
          l2e = std::min(l2e, lvw);
        } else {
          l2e = std::min(l2e, l2vw);
        }
      }
    }
  }

  bool test(int v) {
    const int e = parent_edge_[static_cast<size_t>(v)];
    const auto& outs = out_[static_cast<size_t>(v)];
    for (size_t k = 0; k < outs.size(); ++k) {
      const int ei = outs[k];
      const int w = dst_[static_cast<size_t>(ei)];
      stack_bottom_[static_cast<size_t>(ei)] = static_cast<int>(stack_.size());
      if (ei == parent_edge_[static_cast<size_t>(w)]) {
        if (!test(w)) return false;
      } else {
        lowpt_edge_[static_cast<size_t>(ei)] = ei;
        ConflictPair p;
        p.right = {ei, ei};
        stack_.push_back(p);
      }
      if (lowpt(ei) < height_[static_cast<size_t>(v)]) {
        if (k == 0)
          lowpt_edge_[static_cast<size_t>(e)] = lowpt_edge_[static_cast<size_t>(ei)];
        else if (!add_constraints(ei, e))
          return false;
      }
    }
    if (e >= 0) remove_back_edges(e);
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    while (true) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.swap();
      if (!q.left.empty()) return false;
      if (lowpt(q.right.low) > lowpt(e)) {
        if (p.right.empty())
          p.right = q.right;
        else
          ref_[static_cast<size_t>(p.right.low)] = q.right.high;
        p.right.low = q.right.low;
      } else {
        ref_[static_cast<size_t>(q.right.low)] = lowpt_edge_[static_cast<size_t>(e)];
      }
      if (static_cast<int>(stack_.size()) == stack_bottom_[static_cast<size_t>(ei)]) break;
    }
    while (!stack_.empty() && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) q.swap();
      if (conflicting(q.right, ei)) return false;
      ref_[static_cast<size_t>(p.right.low)] = q.right.high;
      if (q.right.low >= 0) p.right.low = q.right.low;
      if (p.left.empty())
        p.left = q.left;
      else
        ref_[static_cast<size_t>(p.left.low)] = q.left.high;
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    const int u = src_[static_cast<size_t>(e)];
    while (!stack_.empty() && lowest(stack_.back()) == height_[static_cast<size_t>(u)]) {
      const ConflictPair p = stack_.back();
      stack_.pop_back();
      if (p.left.low >= 0) side_[static_cast<size_t>(p.left.low)] = -1;
    }
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high >= 0 && dst_[static_cast<size_t>(p.left.high)] == u)
        p.left.high = ref_[static_cast<size_t>(p.left.high)];
      if (p.left.high < 0 && p.left.low >= 0) {
        ref_[static_cast<size_t>(p.left.low)] = p.right.low;
        side_[static_cast<size_t>(p.left.low)] = -1;
        p.left.low = -1;
      }
      while (p.right.high >= 0 && dst_[static_cast<size_t>(p.right.high)] == u)
        p.right.high = ref_[static_cast<size_t>(p.right.high)];
      if (p.right.high < 0 && p.right.low >= 0) {
        ref_[static_cast<size_t>(p.right.low)] = p.left.low;
        side_[static_cast<size_t>(p.right.low)] = -1;
        p.right.low = -1;
      }
      stack_.push_back(p);
    }
    if (lowpt(e) < height_[static_cast<size_t>(u)]) {
      const int hl = stack_.back().left.high;
      const int hr = stack_.back().right.high;
      if (hl >= 0 && (hr < 0 || lowpt(hl) > lowpt(hr)))
        ref_[static_cast<size_t>(e)] = hl;
      else
        ref_[static_cast<size_t>(e)] = hr;
    }
  }

  int sign(int e) {
    // Iterative resolution of the reference chain.
    std::vector<int> chain;
    int cur = e;
    while (ref_[static_cast<size_t>(cur)] >= 0) {
      chain.push_back(cur);
      cur = ref_[static_cast<size_t>(cur)];
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      const int x = *it;
      side_[static_cast<size_t>(x)] *= side_[static_cast<size_t>(ref_[static_cast<size_t>(x)])];
      ref_[static_cast<size_t>(x)] = -1;
    }
    return side_[static_cast<size_t>(e)];
  }

  // Half-edge list primitives. cw_[v][w] is the clockwise successor of w at v.
  void add_first_ever(int v, int w) {
    cw_[static_cast<size_t>(v)][w] = w;
    ccw_[static_cast<size_t>(v)][w] = w;
    leftmost_[static_cast<size_t>(v)] = w;
  }
  // New half-edge directly clockwise after ref.
  void insert_cw_of(int v, int w, int ref) {
    auto& cw = cw_[static_cast<size_t>(v)];
    auto& ccw = ccw_[static_cast<size_t>(v)];
    const int after = cw.at(ref);
    cw[ref] = w;
    ccw[w] = ref;
    cw[w] = after;
    ccw[after] = w;
  }
  // New half-edge directly counterclockwise before ref.
  void insert_ccw_of(int v, int w, int ref) {
    auto& cw = cw_[static_cast<size_t>(v)];
    auto& ccw = ccw_[static_cast<size_t>(v)];
    const int before = ccw.at(ref);
    ccw[ref] = w;
    cw[w] = ref;
    ccw[w] = before;
    cw[before] = w;
    if (leftmost_[static_cast<size_t>(v)] == ref) leftmost_[static_cast<size_t>(v)] = w;
  }
  void add_first(int v, int w) {
    if (leftmost_[static_cast<size_t>(v)] < 0)
      add_first_ever(v, w);
    else
      insert_ccw_of(v, w, leftmost_[static_cast<size_t>(v)]);
  }

  void embed(int v) {
    for (int ei : out_[static_cast<size_t>(v)]) {
      const int w = dst_[static_cast<size_t>(ei)];
      if (ei == parent_edge_[static_cast<size_t>(w)]) {
        add_first(w, v);
        left_ref_[static_cast<size_t>(v)] = w;
        right_ref_[static_cast<size_t>(v)] = w;
        embed(w);
      } else if (side_[static_cast<size_t>(ei)] == 1) {
        insert_cw_of(w, v, right_ref_[static_cast<size_t>(w)]);
      } else {
        insert_ccw_of(w, v, left_ref_[static_cast<size_t>(w)]);
        left_ref_[static_cast<size_t>(w)] = v;
      }
    }
  }

  const Graph& g_;
  std::vector<int> roots_;
  std::vector<int> height_, parent_edge_;
  std::vector<int> src_, dst_, lowpt_, lowpt2_, nesting_, ref_, side_, lowpt_edge_, stack_bottom_;
  std::vector<std::vector<int>> out_, out_orig_;
  std::vector<ConflictPair> stack_;
  std::vector<std::map<int, int>> cw_, ccw_;
  std::vector<int> leftmost_, left_ref_, right_ref_;
};

void check_euler(const RotationSystem& rs) {
  const Graph& g = rs.graph();
  const auto fs = faces(rs);
  std::vector<int> comp(static_cast<size_t>(g.num_vertices()), -1);
  int nc = 0;
  for (const auto& part : components_within(g, g.all_vertices())) {
    part.for_each([&](int v) { comp[static_cast<size_t>(v)] = nc; });
    ++nc;
  }
  std::vector<long> v_count(static_cast<size_t>(nc), 0), e_count(static_cast<size_t>(nc), 0),
      f_count(static_cast<size_t>(nc), 0);
  for (int v = 0; v < g.num_vertices(); ++v) ++v_count[static_cast<size_t>(comp[static_cast<size_t>(v)])];
  for (int e = 0; e < g.num_edges(); ++e) ++e_count[static_cast<size_t>(comp[static_cast<size_t>(g.edge(e).first)])];
  for (const auto& f : fs) ++f_count[static_cast<size_t>(comp[static_cast<size_t>(f.vertices.front())])];
  for (int c = 0; c < nc; ++c)
    if (v_count[static_cast<size_t>(c)] - e_count[static_cast<size_t>(c)] + f_count[static_cast<size_t>(c)] != 2)
      throw InternalError("embedding violates Euler's relation");
}

std::optional<RotationSystem> try_embed(const Graph& g) {
  LrPlanarity lr(g);
  auto rot = lr.run();
  if (!rot) return std::nullopt;
  return RotationSystem(g, std::move(*rot));
}

}  // namespace

EmbedResult planar_embed(const Graph& g) {
  EmbedResult res;
  if (auto rs = try_embed(g)) {
    check_euler(*rs);
    res.embedding = std::move(rs);
    return res;
  }
  // Greedy edge deletion down to a minimal non-planar subgraph.
  std::vector<char> alive(static_cast<size_t>(g.num_edges()), 1);
  auto build = [&]() {
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int e = 0; e < g.num_edges(); ++e)
      if (alive[static_cast<size_t>(e)]) es.push_back(g.edge(e));
    return Graph::with_vertices(g.num_vertices(), es);
  };
  for (int e = 0; e < g.num_edges(); ++e) {
    alive[static_cast<size_t>(e)] = 0;
    if (try_embed(build())) alive[static_cast<size_t>(e)] = 1;
  }
  for (int e = 0; e < g.num_edges(); ++e)
    if (alive[static_cast<size_t>(e)]) res.witness_edges.push_back(e);
  return res;
}

bool is_planar(const Graph& g) { return try_embed(g).has_value(); }

namespace {

struct Regions {
  std::vector<int> face_of_dart;
  std::vector<int> root;  // per face
  int region_of_edge(int e) const { return root[static_cast<size_t>(face_of_dart[static_cast<size_t>(2 * e)])]; }
};

int find_root(std::vector<int>& p, int x) {
  while (p[static_cast<size_t>(x)] != x) {
    p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
    x = p[static_cast<size_t>(x)];
  }
  return x;
}

Regions regions_of(const RotationSystem& e, const std::vector<FaceWalk>& fs, const EdgeSet& c) {
  const Graph& g = e.graph();
  Regions r;
  r.face_of_dart.assign(static_cast<size_t>(2 * g.num_edges()), -1);
  for (size_t f = 0; f < fs.size(); ++f)
    for (int d : fs[f].darts) r.face_of_dart[static_cast<size_t>(d)] = static_cast<int>(f);
  std::vector<int> parent(fs.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (int ed = 0; ed < g.num_edges(); ++ed) {
    if (c.test(ed)) continue;
    const int a = find_root(parent, r.face_of_dart[static_cast<size_t>(2 * ed)]);
    const int b = find_root(parent, r.face_of_dart[static_cast<size_t>(2 * ed + 1)]);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
  r.root.resize(fs.size());
  for (size_t f = 0; f < fs.size(); ++f) r.root[f] = find_root(parent, static_cast<int>(f));
  return r;
}

int region_of_vertex(const Graph& g, const Regions& r, int v) {
  const int e = g.incident_edges(v)[0];
  const int d = g.edge(e).first == v ? 2 * e : 2 * e + 1;
  return r.root[static_cast<size_t>(r.face_of_dart[static_cast<size_t>(d)])];
}

void require_cycle(const RotationSystem& e, const EdgeSet& c) {
  if (!is_cycle(e.graph(), c)) throw InputError("edge set is not a cycle of the embedded graph");
  if (!is_connected(e.graph())) throw InputError("cycle sides need a connected embedded graph");
}

}  // namespace

SidePair cycle_sides(const RotationSystem& e, const EdgeSet& c) {
  require_cycle(e, c);
  const Graph& g = e.graph();
  const auto fs = faces(e);
  const Regions r = regions_of(e, fs, c);
  const int e0 = c.first();
  const int ra = r.root[static_cast<size_t>(r.face_of_dart[static_cast<size_t>(2 * e0)])];
  const int rb = r.root[static_cast<size_t>(r.face_of_dart[static_cast<size_t>(2 * e0 + 1)])];
  if (ra == rb) throw InternalError("cycle does not separate the sphere");
  SidePair sp{g.empty_vertex_set(), g.empty_vertex_set()};
  const VertexSet on = cycle_vertices(g, c);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (on.test(v)) continue;
    const int rv = region_of_vertex(g, r, v);
    if (rv == ra)
      sp.side_a.set(v);
    else if (rv == rb)
      sp.side_b.set(v);
    else
      throw InternalError("cycle bounds more than two regions");
  }
  if (sp.side_b < sp.side_a) std::swap(sp.side_a, sp.side_b);
  return sp;
}

bool cycles_nested(const RotationSystem& e, const EdgeSet& c1, const EdgeSet& c2) {
  require_cycle(e, c1);
  if (!is_cycle(e.graph(), c2)) throw InputError("edge set is not a cycle of the embedded graph");
  const Graph& g = e.graph();
  const auto fs = faces(e);
  const Regions r = regions_of(e, fs, c1);
  const VertexSet on1 = cycle_vertices(g, c1);
  int seen = -1;
  bool nested = true;
  auto touch = [&](int region) {
    if (seen < 0)
      seen = region;
    else if (seen != region)
      nested = false;
  };
  cycle_vertices(g, c2).for_each([&](int v) {
    if (!on1.test(v)) touch(region_of_vertex(g, r, v));
  });
  c2.for_each([&](int ed) {
    if (!c1.test(ed)) touch(r.region_of_edge(ed));
  });
  return nested;
}

bool is_facial(const std::vector<FaceWalk>& fs, const EdgeSet& c) {
  return std::any_of(fs.begin(), fs.end(), [&](const FaceWalk& f) { return f.is_cycle && f.edges == c; });
}

bool is_facial(const RotationSystem& e, const EdgeSet& c) { return is_facial(faces(e), c); }

CertificateReport facial_generation_report(const RotationSystem& e, const std::vector<EdgeSet>& fam) {
  CertificateReport rep;
  const Graph& g = e.graph();
  const auto fs = faces(e);
  for (size_t i = 0; i < fam.size(); ++i) {
    if (!is_cycle(g, fam[i])) {
      rep.all_cycles = false;
      if (rep.first_non_facial < 0) rep.first_non_facial = static_cast<int>(i);
      continue;
    }
    if (!is_facial(fs, fam[i])) {
      rep.all_facial = false;
      if (rep.first_non_facial < 0) rep.first_non_facial = static_cast<int>(i);
    }
  }
  rep.rank = gf2_rank(fam, g.num_edges());
  rep.dimension = cycle_space_dimension(g);
  rep.ok = rep.all_cycles && rep.all_facial && rep.rank == rep.dimension;
  return rep;
}

bool facial_generation_certificate(const RotationSystem& e, const std::vector<EdgeSet>& fam) {
  return facial_generation_report(e, fam).ok;
}

int export_outer_face(const RotationSystem& e, const std::vector<FaceWalk>& fs) {
  int best = -1;
  size_t best_len = 0;
  VertexId best_min = 0;
  for (size_t f = 0; f < fs.size(); ++f) {
    VertexId mn = std::numeric_limits<VertexId>::max();
    for (int v : fs[f].vertices) mn = std::min(mn, e.graph().id(v));
    const size_t len = fs[f].darts.size();
    if (best < 0 || len > best_len || (len == best_len && mn < best_min)) {
      best = static_cast<int>(f);
      best_len = len;
      best_min = mn;
    }
  }
  return best;
}

}  // namespace nestree
