#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "plum/diagram.hpp"
#include "plum/graph.hpp"

namespace plum::io {

using nlohmann::json;

// Graph:      {"vertices":[0,1,..],"edges":[[id,a,b],..],
//              "rotation":{"<vertex>":[[edge,side],..],..}}
// Diagram:    graph fields plus
//             "nodes":[{"id":i,"kind":"vertex","vertex":v} |
//                      {"id":i,"kind":"crossing","crossing":c}],
//             "arcs":[[id,edge,forward,tail,head],..],
//             "nodeRotation":{"<node>":[[arc,end],..],..},
//             "crossings":[{"id":c,"node":i,"over":[[arc,end],[arc,end]],
//                           "under":[[arc,end],[arc,end]]}]
// Projection: as a diagram, crossings carry only "id" and "node".
// Tree:       {"edges":[..],"root":v}, both required
// Every reader throws std::invalid_argument on malformed input.

json to_json(const PlanarGraph& g);
PlanarGraph graph_from_json(const json& j);

json to_json(const Diagram& d);
Diagram diagram_from_json(const json& j);

json to_json(const Projection& p);
Projection projection_from_json(const json& j);

json to_json(const SpanningTree& t);
SpanningTree tree_from_json(const json& j);

/// True when every crossing record carries over/under data.
bool has_layering(const json& j);

/// Integer vectors from a JSON array of arrays.
std::vector<std::vector<int>> vectors_from_json(const json& j);

json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const json& j);

}  // namespace plum::io
