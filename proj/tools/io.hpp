#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "nestree/graph.hpp"
#include "nestree/planarity.hpp"
#include "nestree/separations.hpp"
#include "nestree/symmetry.hpp"
#include "nestree/treedecomp.hpp"

namespace nestree::io {

using nlohmann::json;

struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;  // empty, or one per edge ("" = unlabeled)
};

// All loaders throw InputError with the offending field.
json graph_to_json(const Graph& g, const std::vector<std::string>& labels = {});
LabeledGraph graph_from_json(const json& j);

// Cycles as lists of [u, v] identifier pairs.
json cycles_to_json(const Graph& g, const std::vector<EdgeSet>& cycles);
std::vector<EdgeSet> cycles_from_json(const Graph& g, const json& j);

json separations_to_json(const Graph& g, const std::vector<Separation>& seps);
std::vector<Separation> separations_from_json(const Graph& g, const json& j);

// Generators as image-identifier arrays in vertex order.
json action_to_json(const Action& a);
Action action_from_json(const Graph& g, const json& j);

json decomposition_to_json(const TreeDecomposition& td);
TreeDecomposition decomposition_from_json(const Graph& g, const json& j);

json report_to_json(const DecompositionReport& r);
json canonicity_to_json(const CanonicityReport& r);
json embedding_to_json(const RotationSystem& e);

std::string graph_to_dot(const Graph& g, const std::vector<std::string>& labels = {});
std::string decomposition_to_dot(const TreeDecomposition& td);
std::string graph_to_graphml(const Graph& g, const std::vector<std::string>& labels = {});

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace nestree::io
