#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "cgx/graph.hpp"

namespace cgx::graphcore {

struct GraphBundle {
    Graph graph;
    SubsetFamily family;
};

// Ingestion schema: {"vertices": [names], "edges": [[u,v],...],
// "families": [{"label": str, "members": [names]}]}. "families" is optional.
GraphBundle graph_from_json(const nlohmann::json& j);
GraphBundle load_graph_file(const std::string& path);

nlohmann::json graph_to_json(const Graph& g, const SubsetFamily& family);

}  // namespace cgx::graphcore
