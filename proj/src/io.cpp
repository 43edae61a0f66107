#include "plum/io.hpp"

#include <fstream>
#include <stdexcept>

namespace plum::io {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed ") + what + ": " + e.what());
  }
}

json end_pair(ArcEnd e) { return json::array({e.arc, e.end}); }

ArcEnd arc_end(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("arc end must be [arc, end]");
  return {j.at(0).get<int>(), j.at(1).get<int>()};
}

std::vector<int> dense_ids(const json& list, const char* what) {
  std::vector<int> ids;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& item = list.at(i);
    const int id = item.is_array() ? item.at(0).get<int>() : item.is_object() ? item.at("id").get<int>() : item.get<int>();
    if (id != static_cast<int>(i)) throw std::invalid_argument(std::string(what) + " ids must be 0..count-1 in order");
    ids.push_back(id);
  }
  return ids;
}

json map_fields(const PlanarMap& map) {
  json nodes = json::array();
  json rotation = json::object();
  for (std::size_t i = 0; i < map.nodes.size(); ++i) {
    const auto& node = map.nodes[i];
    json n = {{"id", i}};
    if (node.kind == NodeKind::vertex) {
      n["kind"] = "vertex";
      n["vertex"] = node.ref;
    } else {
      n["kind"] = "crossing";
      n["crossing"] = node.ref;
    }
    nodes.push_back(std::move(n));
    json ends = json::array();
    for (const auto& e : node.rotation) ends.push_back(end_pair(e));
    rotation[std::to_string(i)] = std::move(ends);
  }
  json arcs = json::array();
  for (std::size_t a = 0; a < map.arcs.size(); ++a) {
    const auto& arc = map.arcs[a];
    arcs.push_back(json::array({a, arc.edge, arc.forward, arc.tail, arc.head}));
  }
  return {{"nodes", nodes}, {"arcs", arcs}, {"nodeRotation", rotation}};
}

PlanarMap map_from_json(const json& j) {
  PlanarMap map;
  const auto& nodes = j.at("nodes");
  dense_ids(nodes, "node");
  for (const auto& n : nodes) {
    MapNode node;
    const auto kind = n.at("kind").get<std::string>();
    if (kind == "vertex") {
      node.kind = NodeKind::vertex;
      node.ref = n.at("vertex").get<int>();
    } else if (kind == "crossing") {
      node.kind = NodeKind::crossing;
      node.ref = n.at("crossing").get<int>();
    } else {
      throw std::invalid_argument("unknown node kind " + kind);
    }
    map.nodes.push_back(std::move(node));
  }
  const auto& arcs = j.at("arcs");
  dense_ids(arcs, "arc");
  for (const auto& a : arcs) {
    if (a.size() != 5) throw std::invalid_argument("arc must be [id, edge, forward, tail, head]");
    map.arcs.push_back({a.at(1).get<int>(), a.at(2).get<bool>(), a.at(3).get<int>(), a.at(4).get<int>()});
  }
  const auto& rotation = j.at("nodeRotation");
  if (rotation.size() != map.nodes.size()) throw std::invalid_argument("nodeRotation must list every node");
  for (std::size_t i = 0; i < map.nodes.size(); ++i)
    for (const auto& e : rotation.at(std::to_string(i))) map.nodes[i].rotation.push_back(arc_end(e));
  return map;
}

json with_graph(const PlanarGraph& g, const PlanarMap& map) {
  json j = to_json(g);
  j.update(map_fields(map));
  return j;
}

}  // namespace

json to_json(const PlanarGraph& g) {
  json vertices = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) vertices.push_back(v);
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back(json::array({e.id, e.a, e.b}));
  json rotation = json::object();
  for (int v = 0; v < g.vertex_count(); ++v) {
    json ends = json::array();
    for (const auto& end : g.rotation(v)) ends.push_back(json::array({end.edge, end.side}));
    rotation[std::to_string(v)] = std::move(ends);
  }
  return {{"vertices", vertices}, {"edges", edges}, {"rotation", rotation}};
}

PlanarGraph graph_from_json(const json& j) {
  return guarded("graph", [&] {
    const int vertex_count = static_cast<int>(dense_ids(j.at("vertices"), "vertex").size());
    const auto& edges = j.at("edges");
    dense_ids(edges, "edge");
    std::vector<std::array<VertexId, 2>> endpoints;
    for (const auto& e : edges) {
      if (e.size() != 3) throw std::invalid_argument("edge must be [id, a, b]");
      endpoints.push_back({e.at(1).get<int>(), e.at(2).get<int>()});
    }
    if (!j.contains("rotation")) return PlanarGraph::from_edges(vertex_count, std::move(endpoints));
    const auto& rot = j.at("rotation");
    if (rot.size() != std::size_t(vertex_count)) throw std::invalid_argument("rotation must list every vertex");
    std::vector<std::vector<EdgeEnd>> rotation(static_cast<std::size_t>(vertex_count));
    for (int v = 0; v < vertex_count; ++v)
      for (const auto& end : rot.at(std::to_string(v))) {
        if (!end.is_array() || end.size() != 2) throw std::invalid_argument("edge end must be [edge, side]");
        rotation[std::size_t(v)].push_back({end.at(0).get<int>(), end.at(1).get<int>()});
      }
    return PlanarGraph(vertex_count, std::move(endpoints), std::move(rotation));
  });
}

json to_json(const Diagram& d) {
  json j = with_graph(d.graph, d.map);
  json crossings = json::array();
  for (const auto& x : d.crossings)
    crossings.push_back({{"id", x.id.value},
                         {"node", x.node},
                         {"over", json::array({end_pair(x.over[0]), end_pair(x.over[1])})},
                         {"under", json::array({end_pair(x.under[0]), end_pair(x.under[1])})}});
  j["crossings"] = std::move(crossings);
  return j;
}

Diagram diagram_from_json(const json& j) {
  return guarded("diagram", [&] {
    Diagram d;
    d.graph = graph_from_json(j);
    d.map = map_from_json(j);
    for (const auto& c : j.at("crossings")) {
      Crossing x;
      x.id = CrossingId{c.at("id").get<int>()};
      x.node = c.at("node").get<int>();
      const auto& over = c.at("over");
      const auto& under = c.at("under");
      if (over.size() != 2 || under.size() != 2) throw std::invalid_argument("over and under list two arc ends");
      x.over = {arc_end(over.at(0)), arc_end(over.at(1))};
      x.under = {arc_end(under.at(0)), arc_end(under.at(1))};
      d.crossings.push_back(x);
    }
    return d;
  });
}

json to_json(const Projection& p) {
  json j = with_graph(p.graph, p.map);
  json crossings = json::array();
  for (const auto& x : p.crossings) crossings.push_back({{"id", x.id.value}, {"node", x.node}});
  j["crossings"] = std::move(crossings);
  return j;
}

Projection projection_from_json(const json& j) {
  return guarded("projection", [&] {
    Projection p;
    p.graph = graph_from_json(j);
    p.map = map_from_json(j);
    for (const auto& c : j.at("crossings")) p.crossings.push_back({CrossingId{c.at("id").get<int>()}, c.at("node").get<int>()});
    return p;
  });
}

json to_json(const SpanningTree& t) { return {{"edges", t.edges}, {"root", t.root}}; }

SpanningTree tree_from_json(const json& j) {
  return guarded("tree", [&] {
    SpanningTree t;
    t.edges = j.at("edges").get<std::vector<EdgeId>>();
    std::sort(t.edges.begin(), t.edges.end());
    t.root = j.at("root").get<VertexId>();
    return t;
  });
}

bool has_layering(const json& j) {
  if (!j.contains("crossings")) return false;
  for (const auto& c : j.at("crossings"))
    if (!c.contains("over") || !c.contains("under")) return false;
  return true;
}

std::vector<std::vector<int>> vectors_from_json(const json& j) {
  return guarded("vector list", [&] { return j.get<std::vector<std::vector<int>>>(); });
}

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace plum::io
