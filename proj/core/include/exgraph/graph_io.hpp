#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

#include "exgraph/graph.hpp"

namespace exgraph {

// {"order": n, "edges": [[i,j],...], "labels": [...]} with 0-based
// vertices, i < j, edges sorted. "labels" present only for labeled graphs.
nlohmann::ordered_json graph_to_json(const Graph& g);
std::string graph_to_json_string(const Graph& g);

Graph graph_from_json(const nlohmann::json& j);
Graph parse_graph(std::string_view text);

std::string graph_to_dot(const Graph& g);

}  // namespace exgraph
