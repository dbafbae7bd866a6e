#include "io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "nestree/error.hpp"

namespace nestree::io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field '") + name + "'");
  return j.at(name);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

json id_list(const Graph& g, const VertexSet& s) { return g.ids_of(s); }

VertexSet set_from(const Graph& g, const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of vertex identifiers");
  VertexSet s = g.empty_vertex_set();
  for (const auto& x : j) s.set(g.index(as_int(x, what)));
  return s;
}

json edge_pairs(const Graph& g, const EdgeSet& c) {
  json out = json::array();
  c.for_each([&](int e) {
    const auto [u, v] = g.edge_ids(e);
    out.push_back({u, v});
  });
  return out;
}

int edge_from(const Graph& g, const json& p) {
  if (!p.is_array() || p.size() != 2) throw InputError("edge must be a [u, v] pair");
  const int u = g.index(as_int(p[0], "edge endpoint"));
  const int v = g.index(as_int(p[1], "edge endpoint"));
  const auto e = g.edge_index(u, v);
  if (!e) throw InputError("no edge " + std::to_string(g.id(u)) + "-" + std::to_string(g.id(v)));
  return *e;
}

}  // namespace

json graph_to_json(const Graph& g, const std::vector<std::string>& labels) {
  json j;
  j["vertices"] = g.ids();
  json edges = json::array();
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge_ids(e);
    edges.push_back({u, v});
  }
  j["edges"] = edges;
  if (!labels.empty()) {
    json lab = json::object();
    for (size_t e = 0; e < labels.size(); ++e)
      if (!labels[e].empty()) lab[std::to_string(e)] = labels[e];
    j["labels"] = lab;
  }
  return j;
}

LabeledGraph graph_from_json(const json& j) {
  const json& vs = field(j, "vertices");
  const json& es = field(j, "edges");
  if (!vs.is_array() || !es.is_array()) throw InputError("'vertices' and 'edges' must be arrays");
  std::vector<VertexId> ids;
  for (const auto& v : vs) ids.push_back(as_int(v, "vertex identifier"));
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& p : es) {
    if (!p.is_array() || p.size() != 2) throw InputError("edge must be a [u, v] pair");
    edges.emplace_back(as_int(p[0], "edge endpoint"), as_int(p[1], "edge endpoint"));
  }
  LabeledGraph out{Graph(ids, edges), {}};
  if (j.contains("labels")) {
    const json& lab = j.at("labels");
    if (!lab.is_object()) throw InputError("'labels' must map edge indices to strings");
    out.labels.assign(static_cast<size_t>(out.graph.num_edges()), "");
    for (const auto& [k, v] : lab.items()) {
      size_t pos = 0;
      int e = -1;
      try {
        e = std::stoi(k, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != k.size() || e < 0 || e >= out.graph.num_edges()) throw InputError("label key '" + k + "' is not an edge index");
      if (!v.is_string()) throw InputError("label of edge " + k + " must be a string");
      out.labels[static_cast<size_t>(e)] = v.get<std::string>();
    }
  }
  // Edge indices follow the file order, so labels stay attached.
  return out;
}

json cycles_to_json(const Graph& g, const std::vector<EdgeSet>& cycles) {
  json arr = json::array();
  for (const auto& c : cycles) arr.push_back(edge_pairs(g, c));
  return json{{"cycles", arr}};
}

std::vector<EdgeSet> cycles_from_json(const Graph& g, const json& j) {
  const json& arr = field(j, "cycles");
  if (!arr.is_array()) throw InputError("'cycles' must be an array");
  std::vector<EdgeSet> out;
  for (const auto& c : arr) {
    if (!c.is_array()) throw InputError("cycle must be an array of edges");
    EdgeSet s = g.empty_edge_set();
    for (const auto& p : c) s.set(edge_from(g, p));
    out.push_back(std::move(s));
  }
  return out;
}

json separations_to_json(const Graph& g, const std::vector<Separation>& seps) {
  json arr = json::array();
  for (const auto& s : seps) arr.push_back({{"y", id_list(g, s.y)}, {"s", id_list(g, s.s)}, {"z", id_list(g, s.z)}});
  return json{{"separations", arr}};
}

std::vector<Separation> separations_from_json(const Graph& g, const json& j) {
  const json& arr = field(j, "separations");
  if (!arr.is_array()) throw InputError("'separations' must be an array");
  std::vector<Separation> out;
  for (const auto& s : arr) {
    Separation sep{set_from(g, field(s, "y"), "y"), set_from(g, field(s, "s"), "s"), set_from(g, field(s, "z"), "z")};
    require_separation(g, sep);
    out.push_back(std::move(sep));
  }
  return out;
}

json action_to_json(const Action& a) {
  const Graph& g = a.host;
  json gens = json::array();
  for (const auto& p : a.generators) {
    json img = json::array();
    for (int w : p) img.push_back(g.id(w));
    gens.push_back(img);
  }
  json partial = json::array();
  for (const auto& m : a.partial) {
    json dom = json::array();
    json img = json::array();
    for (int v = 0; v < g.num_vertices(); ++v)
      if (m.defined(v)) {
        dom.push_back(g.id(v));
        img.push_back(g.id(m(v)));
      }
    partial.push_back({{"domain", dom}, {"image", img}});
  }
  return json{{"generators", gens}, {"partial", partial}};
}

Action action_from_json(const Graph& g, const json& j) {
  Action a;
  a.host = g;
  const int n = g.num_vertices();
  if (j.contains("generators")) {
    for (const auto& p : j.at("generators")) {
      if (!p.is_array() || static_cast<int>(p.size()) != n)
        throw InputError("generator must list one image per vertex");
      Permutation perm;
      for (const auto& x : p) perm.push_back(g.index(as_int(x, "generator image")));
      a.generators.push_back(std::move(perm));
    }
  }
  if (j.contains("partial")) {
    for (const auto& m : j.at("partial")) {
      const json& dom = field(m, "domain");
      const json& img = field(m, "image");
      if (!dom.is_array() || !img.is_array() || dom.size() != img.size())
        throw InputError("partial map needs equally long 'domain' and 'image'");
      PartialMap pm{std::vector<int>(static_cast<size_t>(n), -1)};
      for (size_t i = 0; i < dom.size(); ++i)
        pm.image[static_cast<size_t>(g.index(as_int(dom[i], "domain vertex")))] = g.index(as_int(img[i], "image vertex"));
      a.partial.push_back(std::move(pm));
    }
  }
  validate(a);
  return a;
}

json decomposition_to_json(const TreeDecomposition& td) {
  json j;
  json nodes = json::array();
  json kind = json::array();
  json bags = json::array();
  for (int t = 0; t < td.num_nodes(); ++t) {
    nodes.push_back(t);
    kind.push_back(to_string(td.kind[static_cast<size_t>(t)]));
    bags.push_back(id_list(td.host, td.bags[static_cast<size_t>(t)]));
  }
  json edges = json::array();
  json adhesion = json::array();
  for (int e = 0; e < td.tree.num_edges(); ++e) {
    const auto [a, b] = td.tree.edge(e);
    edges.push_back({a, b});
    adhesion.push_back(id_list(td.host, td.adhesion_set(e)));
  }
  j["nodes"] = nodes;
  j["kind"] = kind;
  j["bags"] = bags;
  j["tree_edges"] = edges;
  j["adhesion_sets"] = adhesion;
  return j;
}

TreeDecomposition decomposition_from_json(const Graph& g, const json& j) {
  const json& nodes = field(j, "nodes");
  const json& kind = field(j, "kind");
  const json& bags = field(j, "bags");
  const json& edges = field(j, "tree_edges");
  if (!nodes.is_array() || !kind.is_array() || !bags.is_array() || !edges.is_array())
    throw InputError("decomposition fields must be arrays");
  const int t = static_cast<int>(nodes.size());
  if (static_cast<int>(kind.size()) != t || static_cast<int>(bags.size()) != t)
    throw InputError("'nodes', 'kind' and 'bags' differ in length");
  for (int i = 0; i < t; ++i)
    if (as_int(nodes[static_cast<size_t>(i)], "node") != i) throw InputError("nodes must be 0..t-1 in order");
  TreeDecomposition td;
  td.host = g;
  for (int i = 0; i < t; ++i) {
    const json& k = kind[static_cast<size_t>(i)];
    if (k == "block") td.kind.push_back(NodeKind::kBlock);
    else if (k == "hub") td.kind.push_back(NodeKind::kHub);
    else throw InputError("node kind must be 'block' or 'hub'");
    td.bags.push_back(set_from(g, bags[static_cast<size_t>(i)], "bag"));
  }
  std::vector<std::pair<VertexId, VertexId>> te;
  for (const auto& p : edges) {
    if (!p.is_array() || p.size() != 2) throw InputError("tree edge must be a [a, b] pair");
    const int a = as_int(p[0], "tree node");
    const int b = as_int(p[1], "tree node");
    if (a < 0 || b < 0 || a >= t || b >= t) throw InputError("tree edge names an unknown node");
    te.emplace_back(a, b);
  }
  td.tree = Graph::with_vertices(t, te);
  return td;
}

json report_to_json(const DecompositionReport& r) {
  json parts = json::array();
  for (const auto& p : r.parts) {
    json pj{{"node", p.node},
            {"size", p.size},
            {"connected", p.connected},
            {"two_connected", p.two_connected},
            {"ends_proxy", p.ends_proxy}};
    pj["certificate"] = p.certificate ? json(*p.certificate) : json(nullptr);
    parts.push_back(pj);
  }
  json j{{"valid", r.valid},
         {"vertices_covered", r.vertices_covered},
         {"edges_covered", r.edges_covered},
         {"traces_connected", r.traces_connected},
         {"tree_ok", r.tree_ok},
         {"witness", r.witness},
         {"width", r.width},
         {"adhesion", r.adhesion},
         {"parts_connected", r.parts_connected},
         {"parts_two_connected", r.parts_two_connected},
         {"dropped_non_proper", r.dropped_non_proper},
         {"warnings", r.warnings},
         {"parts", parts}};
  j["certificate_ok"] = r.certificate_ok ? json(*r.certificate_ok) : json(nullptr);
  return j;
}

json canonicity_to_json(const CanonicityReport& r) {
  return json{{"canonical", r.canonical},
              {"edge_orbit_count", r.edge_orbit_count},
              {"bag_orbit_count", r.bag_orbit_count},
              {"checked_nodes", r.checked_nodes},
              {"skipped_nodes", r.skipped_nodes},
              {"witness", r.witness}};
}

json embedding_to_json(const RotationSystem& e) {
  const Graph& g = e.graph();
  json rot = json::object();
  for (int v = 0; v < g.num_vertices(); ++v) {
    json nb = json::array();
    for (int ed : e.rotation(v)) {
      const auto [a, b] = g.edge(ed);
      nb.push_back(g.id(a == v ? b : a));
    }
    rot[std::to_string(g.id(v))] = nb;
  }
  json fs = json::array();
  for (const auto& f : faces(e)) {
    json walk = json::array();
    for (int v : f.vertices) walk.push_back(g.id(v));
    fs.push_back(walk);
  }
  return json{{"rotation", rot}, {"faces", fs}};
}

std::string graph_to_dot(const Graph& g, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "graph G {\n";
  for (VertexId id : g.ids()) os << "  " << id << ";\n";
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge_ids(e);
    os << "  " << u << " -- " << v;
    if (!labels.empty() && !labels[static_cast<size_t>(e)].empty()) os << " [label=\"" << labels[static_cast<size_t>(e)] << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string decomposition_to_dot(const TreeDecomposition& td) {
  std::ostringstream os;
  os << "graph T {\n";
  for (int t = 0; t < td.num_nodes(); ++t) {
    os << "  n" << t << " [shape=" << (td.kind[static_cast<size_t>(t)] == NodeKind::kHub ? "ellipse" : "box")
       << ", label=\"" << t << ": {";
    const auto ids = td.host.ids_of(td.bags[static_cast<size_t>(t)]);
    for (size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
    os << "}\"];\n";
  }
  for (const auto& [a, b] : td.tree.edges()) os << "  n" << a << " -- n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string graph_to_graphml(const Graph& g, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
     << "  <key id=\"label\" for=\"edge\" attr.name=\"label\" attr.type=\"string\"/>\n"
     << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (VertexId id : g.ids()) os << "    <node id=\"n" << id << "\"/>\n";
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge_ids(e);
    os << "    <edge id=\"e" << e << "\" source=\"n" << u << "\" target=\"n" << v << "\"";
    if (!labels.empty() && !labels[static_cast<size_t>(e)].empty())
      os << "><data key=\"label\">" << labels[static_cast<size_t>(e)] << "</data></edge>\n";
    else
      os << "/>\n";
  }
  os << "  </graph>\n</graphml>\n";
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

void write_json_file(const std::string& path, const json& j) { write_text_file(path, j.dump(2) + "\n"); }

}  // namespace nestree::io
