#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "io.hpp"
#include "nestree/cayley.hpp"
#include "nestree/corpus.hpp"
#include "nestree/cyclespace.hpp"
#include "nestree/error.hpp"
#include "nestree/pipeline.hpp"
#include "nestree/tutte.hpp"

namespace fs = std::filesystem;
using namespace nestree;
using io::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

long env_long(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const long x = std::strtol(v, &end, 10);
  if (*end != '\0' || x < 0) throw InputError(std::string("environment variable ") + name + " must be a nonnegative integer");
  return x;
}

AutomorphismOptions aut_options() {
  AutomorphismOptions o;
  o.max_vertices = static_cast<int>(env_long("NESTREE_AUT_MAX_VERTICES", o.max_vertices));
  o.node_budget = env_long("NESTREE_AUT_NODE_BUDGET", o.node_budget);
  return o;
}

CayleyOptions cayley_options() {
  CayleyOptions o;
  o.vertex_cap = static_cast<int>(env_long("NESTREE_CAYLEY_VERTEX_CAP", o.vertex_cap));
  return o;
}

TightOptions tight_options() {
  TightOptions o;
  o.max_order = static_cast<int>(env_long("NESTREE_TIGHT_MAX_ORDER", o.max_order));
  o.separator_budget = env_long("NESTREE_TIGHT_BUDGET", o.separator_budget);
  return o;
}

io::LabeledGraph load_graph(const std::string& path) { return io::graph_from_json(io::read_json_file(path)); }

void emit(const json& j, const std::string& out) {
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else
    io::write_json_file(out, j);
}

json id_classes(const Graph& g, const std::vector<std::vector<int>>& cls) {
  json out = json::array();
  for (const auto& c : cls) {
    json ids = json::array();
    for (int v : c) ids.push_back(g.id(v));
    out.push_back(ids);
  }
  return out;
}

bool looks_like_presentation(const std::string& s) {
  return s.find('<') != std::string::npos || s.find("gens") != std::string::npos;
}

struct GenerateArgs {
  std::string name;
  std::optional<int> param;
  std::optional<int> radius;
  std::string out_dir = ".";
  std::string prefix;
  unsigned long seed = 1;
  int n = 20;
  int extra = 40;
};

int cmd_generate(const GenerateArgs& a) {
  CorpusInstance ci;
  if (a.name == "random-planar") {
    std::mt19937_64 rng(a.seed);
    ci.name = "random-planar";
    ci.graph = random_planar(a.n, a.extra, rng);
    std::mt19937_64 rng2(a.seed + 1);
    ci.cycles["nested"] = random_nested_cycles(ci.graph, 60, rng2);
  } else if (looks_like_presentation(a.name)) {
    ci.name = "cayley";
    ci.ball = cayley_ball(Presentation::parse(a.name), a.radius.value_or(a.param.value_or(3)), cayley_options());
    ci.graph = ci.ball->graph;
    ci.edge_generator = ci.ball->edge_generator;
  } else if (a.name == "fig1-group" || a.name == "fig2-group") {
    const char* text = a.name == "fig1-group" ? fig1_presentation() : fig2_presentation();
    ci = cayley_instance(a.name, Presentation::parse(text), a.radius.value_or(a.param.value_or(a.name == "fig1-group" ? 6 : 3)));
  } else {
    ci = builtin(a.name, a.radius ? a.radius : a.param);
  }
  std::vector<std::string> labels;
  if (ci.ball) {
    for (int g : ci.edge_generator)
      labels.push_back(std::string(1, ci.ball->presentation.generators[static_cast<size_t>(g)].symbol));
  }
  const std::string prefix = a.prefix.empty() ? ci.name : a.prefix;
  fs::create_directories(a.out_dir);
  const auto path = [&](const std::string& suffix) { return (fs::path(a.out_dir) / (prefix + suffix)).string(); };
  io::write_json_file(path(".graph.json"), io::graph_to_json(ci.graph, labels));
  std::cout << path(".graph.json") << "\n";
  for (const auto& [fam, cycles] : ci.cycles) {
    io::write_json_file(path("." + fam + ".cycles.json"), io::cycles_to_json(ci.graph, cycles));
    std::cout << path("." + fam + ".cycles.json") << "\n";
  }
  for (const auto& [name, act] : ci.actions) {
    io::write_json_file(path("." + name + ".action.json"), io::action_to_json(act));
    std::cout << path("." + name + ".action.json") << "\n";
  }
  if (ci.ball) {
    std::cerr << "ball: " << ci.graph.num_vertices() << " vertices, " << ci.graph.num_edges() << " edges, exact radius "
              << ci.ball->exact_radius << (ci.ball->complete ? ", group enumerated completely" : "") << "\n";
  }
  return kExitPass;
}

int cmd_embed(const std::string& graph, const std::string& out) {
  const auto lg = load_graph(graph);
  const EmbedResult er = planar_embed(lg.graph);
  if (!er.embedding) {
    std::cerr << "not planar; Kuratowski edges:";
    for (int e : er.witness_edges) {
      const auto [u, v] = lg.graph.edge_ids(e);
      std::cerr << " " << u << "-" << v;
    }
    std::cerr << "\n";
    return kExitVerification;
  }
  emit(io::embedding_to_json(*er.embedding), out);
  return kExitPass;
}

int cmd_cycles(const std::string& graph, std::optional<int> max_length, const std::string& family, const std::string& out) {
  const auto lg = load_graph(graph);
  const Graph& g = lg.graph;
  if (!family.empty()) {
    const auto fam = io::cycles_from_json(g, io::read_json_file(family));
    const GenerationReport r = generates_cycle_space(fam, g);
    emit(json{{"generates", r.generates}, {"rank", r.rank}, {"dimension", r.dimension}}, out);
    return r.generates ? kExitPass : kExitVerification;
  }
  std::vector<EdgeSet> cycles;
  if (max_length) {
    cycles = short_cycles(g, *max_length);
  } else {
    const EmbedResult er = planar_embed(g);
    if (!er.embedding) throw InputError("facial cycles need a planar graph");
    for (const auto& f : faces(*er.embedding))
      if (f.is_cycle) cycles.push_back(f.edges);
  }
  emit(io::cycles_to_json(g, cycles), out);
  return kExitPass;
}

int cmd_separations(const std::string& graph, std::optional<int> order, const std::string& cycles_file,
                    const std::string& check, const std::string& out) {
  const auto lg = load_graph(graph);
  const Graph& g = lg.graph;
  if (!check.empty()) {
    SeparationFamily fam(io::separations_from_json(g, io::read_json_file(check)));
    const FamilyReport r = family_verify(fam);
    json j{{"symmetric", r.symmetric}, {"nested", r.nested}, {"max_order", r.max_order}, {"longest_chain", r.longest_chain}};
    if (r.missing_flip >= 0) j["missing_flip"] = r.missing_flip;
    if (r.crossing) j["crossing"] = {r.crossing->first, r.crossing->second};
    emit(j, out);
    return r.symmetric && r.nested ? kExitPass : kExitVerification;
  }
  std::vector<Separation> seps;
  if (!cycles_file.empty()) {
    const EmbedResult er = planar_embed(g);
    if (!er.embedding) throw InputError("cycle separations need a planar graph");
    for (const auto& c : io::cycles_from_json(g, io::read_json_file(cycles_file))) {
      const auto cs = separation_from_cycle(*er.embedding, c);
      seps.push_back(cs.forward);
      seps.push_back(cs.backward);
    }
  } else {
    seps = enumerate_tight(g, order.value_or(2), tight_options());
  }
  emit(io::separations_to_json(g, seps), out);
  return kExitPass;
}

Action load_action_or_aut(const Graph& g, const std::string& action, json* info) {
  if (!action.empty()) return io::action_from_json(g, io::read_json_file(action));
  const AutomorphismGroup ag = automorphism_group(g, aut_options());
  if (info) (*info)["group_order"] = ag.order;
  return ag.action;
}

int cmd_orbits(const std::string& graph, const std::string& action, const std::string& cycles_file, const std::string& out) {
  const auto lg = load_graph(graph);
  const Graph& g = lg.graph;
  json j;
  const Action a = load_action_or_aut(g, action, &j);
  j["vertex_orbits"] = id_classes(g, vertex_orbits(a));
  json eo = json::array();
  for (const auto& c : edge_orbits(a)) {
    json cls = json::array();
    for (int e : c) {
      const auto [u, v] = g.edge_ids(e);
      cls.push_back({u, v});
    }
    eo.push_back(cls);
  }
  j["edge_orbits"] = eo;
  if (!cycles_file.empty()) {
    const auto cycles = io::cycles_from_json(g, io::read_json_file(cycles_file));
    j["cycle_orbits"] = cycle_orbits(a, cycles);
    const InvarianceReport inv = is_invariant(a, cycles);
    j["cycles_invariant"] = inv.invariant;
    j["cycles_checked"] = inv.checked;
    j["cycles_skipped_boundary"] = inv.skipped_boundary;
    if (!inv.invariant) j["witness"] = inv.witness;
  }
  if (!action.empty()) j["action"] = io::action_to_json(a);
  emit(j, out);
  return kExitPass;
}

struct DecomposeArgs {
  std::string graph;
  std::string mode = "nested";
  std::string family;
  std::string separations;
  std::string action;
  std::string out;
  std::string dot;
};

int cmd_decompose(const DecomposeArgs& a) {
  const auto lg = load_graph(a.graph);
  const Graph& g = lg.graph;
  TreeDecomposition td;
  json report;
  if (a.mode == "nested") {
    if (!a.separations.empty()) {
      const SeparationFamily fam(io::separations_from_json(g, io::read_json_file(a.separations)));
      BuildReport br;
      td = build_from_nested(g, fam, &br);
      DecompositionReport r = verify_td(g, td);
      r.dropped_non_proper = br.dropped_non_proper;
      report = io::report_to_json(r);
    } else {
      const Action act = a.action.empty() ? Action{g, {}, {}} : io::action_from_json(g, io::read_json_file(a.action));
      const std::vector<EdgeSet> extra = a.family.empty() ? std::vector<EdgeSet>{} : io::cycles_from_json(g, io::read_json_file(a.family));
      const PlanarResult pr = planar_structure_pipeline(g, act, extra);
      td = pr.td;
      report = io::report_to_json(pr.report);
      report["candidate_cycles"] = pr.candidates.size();
      report["proper_cycles"] = pr.kept.size();
      report["cycle_orbits"] = pr.invariance.orbit_count;
      report["invariance_skipped_boundary"] = pr.invariance.skipped_boundary;
      if (!a.action.empty()) report["canonicity"] = io::canonicity_to_json(pr.canonicity);
    }
  } else if (a.mode == "tutte") {
    td = tutte_decomposition(g);
    report = io::report_to_json(verify_td(g, td));
    json classes = json::array();
    for (int t = 0; t < td.num_nodes(); ++t) classes.push_back(to_string(classify_torso(torso(td, t))));
    report["torso_classes"] = classes;
  } else if (a.mode == "full") {
    const Action act = a.action.empty() ? Action{g, {}, {}} : io::action_from_json(g, io::read_json_file(a.action));
    const GeneralResult gr = general_pipeline(g, act);
    td = gr.td;
    report = io::report_to_json(gr.report);
    json classes = json::array();
    for (auto c : gr.torso_classes) classes.push_back(to_string(c));
    report["outer_torso_classes"] = classes;
    report["supergraph_added_edges"] = gr.supergraph.added.size();
  } else {
    throw InputError("mode must be nested, tutte or full");
  }
  const json dj = io::decomposition_to_json(td);
  if (a.out.empty()) {
    std::cout << json{{"decomposition", dj}, {"report", report}}.dump(2) << "\n";
  } else {
    io::write_json_file(a.out + ".decomposition.json", dj);
    io::write_json_file(a.out + ".report.json", report);
    std::cout << a.out << ".decomposition.json\n" << a.out << ".report.json\n";
  }
  if (!a.dot.empty()) io::write_text_file(a.dot, io::decomposition_to_dot(td));
  return report.at("valid").get<bool>() ? kExitPass : kExitVerification;
}

int cmd_verify(const std::string& graph, const std::string& decomposition, const std::string& action,
               const std::string& family, const std::string& out) {
  const auto lg = load_graph(graph);
  const Graph& g = lg.graph;
  const TreeDecomposition td = io::decomposition_from_json(g, io::read_json_file(decomposition));
  std::optional<CertificateContext> cert;
  if (!family.empty()) {
    const EmbedResult er = planar_embed(g);
    if (!er.embedding) throw InputError("the certificate needs a planar graph");
    CertificateContext c{*er.embedding, {}};
    for (const auto& f : faces(*er.embedding))
      if (f.is_cycle) c.cycles.push_back(f.edges);
    for (auto& cyc : io::cycles_from_json(g, io::read_json_file(family))) c.cycles.push_back(std::move(cyc));
    cert = std::move(c);
  }
  const DecompositionReport r = verify_td(g, td, cert ? &*cert : nullptr);
  json j = io::report_to_json(r);
  std::string failed = r.valid ? "" : r.witness;
  if (failed.empty() && cert && !r.certificate_ok.value_or(false)) failed = "facial-generation certificate fails";
  if (!action.empty()) {
    const Action act = io::action_from_json(g, io::read_json_file(action));
    const CanonicityReport cr = canonicity_check(act, td);
    j["canonicity"] = io::canonicity_to_json(cr);
    if (failed.empty() && !cr.canonical) failed = "canonicity: " + cr.witness;
  }
  j["passed"] = failed.empty();
  if (!out.empty()) io::write_json_file(out, j);
  std::cout << "axioms: " << (r.valid ? "ok" : "FAIL") << ", width " << r.width << ", adhesion " << r.adhesion
            << ", parts connected " << (r.parts_connected ? "yes" : "no") << ", parts 2-connected "
            << (r.parts_two_connected ? "yes" : "no");
  if (r.certificate_ok) std::cout << ", certificate " << (*r.certificate_ok ? "ok" : "FAIL");
  if (j.contains("canonicity")) std::cout << ", canonical " << (j["canonicity"]["canonical"].get<bool>() ? "yes" : "no");
  std::cout << "\n";
  if (!failed.empty()) {
    std::cerr << "first failing check: " << failed << "\n";
    return kExitVerification;
  }
  return kExitPass;
}

int cmd_export(const std::string& graph, const std::string& decomposition, const std::string& format, const std::string& out) {
  const auto lg = load_graph(graph);
  std::string text;
  if (!decomposition.empty()) {
    if (format != "dot") throw InputError("decompositions export to dot only");
    text = io::decomposition_to_dot(io::decomposition_from_json(lg.graph, io::read_json_file(decomposition)));
  } else if (format == "dot") {
    text = io::graph_to_dot(lg.graph, lg.labels);
  } else if (format == "graphml") {
    text = io::graph_to_graphml(lg.graph, lg.labels);
  } else {
    throw InputError("format must be dot or graphml");
  }
  if (out.empty())
    std::cout << text;
  else
    io::write_text_file(out, text);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nestree: nested separations and canonical tree-decompositions of planar graphs"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "write a builtin, random or Cayley-ball graph with its cycle families and actions");
  g->add_option("name", gen.name, "builtin name, random-planar, or a presentation")->required();
  g->add_option("param", gen.param, "size parameter (strip n, grid side, ball radius)");
  g->add_option("--radius", gen.radius, "ball radius");
  g->add_option("--out-dir", gen.out_dir, "output directory");
  g->add_option("--prefix", gen.prefix, "file name prefix");
  g->add_option("--seed", gen.seed, "random seed");
  g->add_option("--n", gen.n, "vertices for random-planar");
  g->add_option("--extra", gen.extra, "edge attempts for random-planar");

  std::string graph, out, family, action, check, cycles_file, decomposition, format = "dot";
  std::optional<int> max_length, order;
  auto* e = app.add_subcommand("embed", "planar embedding (rotation system and faces)");
  e->add_option("graph", graph)->required();
  e->add_option("-o,--out", out);

  auto* c = app.add_subcommand("cycles", "facial or short cycles, or a generation check");
  c->add_option("graph", graph)->required();
  c->add_option("--max-length", max_length, "all cycles up to this length instead of facial cycles");
  c->add_option("--family", family, "cycle file to check against the cycle space");
  c->add_option("-o,--out", out);

  auto* s = app.add_subcommand("separations", "tight separations, cycle separations, or a family check");
  s->add_option("graph", graph)->required();
  s->add_option("--order", order, "maximal order of tight separations (default 2)");
  s->add_option("--cycles", cycles_file, "derive separations from these cycles");
  s->add_option("--check", check, "separation file to check for symmetry and nestedness");
  s->add_option("-o,--out", out);

  auto* o = app.add_subcommand("orbits", "vertex, edge and cycle orbits");
  o->add_option("graph", graph)->required();
  o->add_option("--action", action, "action file (default: full automorphism group)");
  o->add_option("--cycles", cycles_file, "cycle file");
  o->add_option("-o,--out", out);

  DecomposeArgs dec;
  auto* d = app.add_subcommand("decompose", "build a tree-decomposition");
  d->add_option("graph", dec.graph)->required();
  d->add_option("--mode", dec.mode, "nested, tutte or full")->check(CLI::IsMember({"nested", "tutte", "full"}));
  d->add_option("--family", dec.family, "extra candidate cycles");
  d->add_option("--separations", dec.separations, "build directly from this separation family");
  d->add_option("--action", dec.action, "action file");
  d->add_option("-o,--out", dec.out, "output prefix");
  d->add_option("--dot", dec.dot, "DOT file for the decomposition tree");

  auto* v = app.add_subcommand("verify", "check a decomposition");
  v->add_option("graph", graph)->required();
  v->add_option("decomposition", decomposition)->required();
  v->add_option("--action", action, "action file for the canonicity check");
  v->add_option("--family", family, "extra cycles for the facial-generation certificate");
  v->add_option("-o,--out", out, "JSON report");

  auto* x = app.add_subcommand("export", "DOT or GraphML export");
  x->add_option("graph", graph)->required();
  x->add_option("--decomposition", decomposition, "export this decomposition tree instead");
  x->add_option("--format", format)->check(CLI::IsMember({"dot", "graphml"}));
  x->add_option("-o,--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*g) return cmd_generate(gen);
    if (*e) return cmd_embed(graph, out);
    if (*c) return cmd_cycles(graph, max_length, family, out);
    if (*s) return cmd_separations(graph, order, cycles_file, check, out);
    if (*o) return cmd_orbits(graph, action, cycles_file, out);
    if (*d) return cmd_decompose(dec);
    if (*v) return cmd_verify(graph, decomposition, action, family, out);
    if (*x) return cmd_export(graph, decomposition, format, out);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    switch (err.kind()) {
      case ErrorKind::kInput:
        return kExitInput;
      case ErrorKind::kBudget:
        return kExitBudget;
      case ErrorKind::kVerification:
      case ErrorKind::kInternal:
        return kExitVerification;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
