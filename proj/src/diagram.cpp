#include "plum/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "plum/plum_graph.hpp"

namespace plum {

namespace {

std::size_t slot(ArcEnd e) { return std::size_t(2 * e.arc + e.end); }

int max_crossing_id(const Diagram& d) {
  int best = -1;
  for (const auto& x : d.crossings) best = std::max(best, x.id.value);
  return best;
}

// Over/under pairs listed in rotation order, over strand through positions
// `parity` and `parity + 2`.
Crossing layered_crossing(const PlanarMap& map, CrossingId id, int node, int parity) {
  const auto& rot = map.nodes[std::size_t(node)].rotation;
  Crossing x;
  x.id = id;
  x.node = node;
  x.over = {rot[std::size_t(parity)], rot[std::size_t(parity + 2)]};
  x.under = {rot[std::size_t(1 - parity)], rot[std::size_t(3 - parity)]};
  return x;
}

int over_parity(const PlanarMap& map, const Crossing& x) {
  return map.position(x.over[0]) % 2;
}

// Renames an arc end in its node rotation and in any crossing record.
void replace_end(Diagram& d, ArcEnd from, ArcEnd to) {
  auto& rot = d.map.nodes[std::size_t(d.map.node_of(from))].rotation;
  auto it = std::find(rot.begin(), rot.end(), from);
  if (it == rot.end()) throw std::logic_error("arc end missing from its node");
  *it = to;
  for (auto& x : d.crossings)
    for (auto* strand : {&x.over, &x.under})
      std::replace(strand->begin(), strand->end(), from, to);
}

std::vector<int> vertex_nodes(const PlanarGraph& graph, const PlanarMap& map) {
  std::vector<int> node_of_vertex(std::size_t(graph.vertex_count()), -1);
  for (std::size_t i = 0; i < map.nodes.size(); ++i) {
    const auto& node = map.nodes[i];
    if (node.kind != NodeKind::vertex) continue;
    if (node.ref < 0 || node.ref >= graph.vertex_count())
      throw std::invalid_argument("node " + std::to_string(i) + " names an unknown vertex");
    if (node_of_vertex[std::size_t(node.ref)] != -1)
      throw std::invalid_argument("vertex " + std::to_string(node.ref) + " has two nodes");
    node_of_vertex[std::size_t(node.ref)] = static_cast<int>(i);
  }
  for (std::size_t v = 0; v < node_of_vertex.size(); ++v)
    if (node_of_vertex[v] == -1) throw std::invalid_argument("vertex " + std::to_string(v) + " has no node");
  return node_of_vertex;
}

// Structural checks shared by diagrams and projections.
std::vector<std::string> validate_map(const PlanarGraph& graph, const PlanarMap& map,
                                      const std::vector<CrossingSite>& sites) {
  std::vector<std::string> problems;
  for (auto& p : graph.validate()) problems.push_back("abstract graph: " + p);

  const int node_count = static_cast<int>(map.nodes.size());
  for (std::size_t a = 0; a < map.arcs.size(); ++a) {
    const auto& arc = map.arcs[a];
    if (arc.tail < 0 || arc.tail >= node_count || arc.head < 0 || arc.head >= node_count)
      return {"arc " + std::to_string(a) + " points at a missing node"};
    if (arc.edge < 0 || arc.edge >= graph.edge_count())
      return {"arc " + std::to_string(a) + " names an unknown edge"};
  }
  std::vector<int> seen(2 * map.arcs.size(), 0);
  for (int i = 0; i < node_count; ++i) {
    for (const auto& e : map.nodes[std::size_t(i)].rotation) {
      if (e.arc < 0 || e.arc >= static_cast<int>(map.arcs.size()) || (e.end != 0 && e.end != 1))
        return {"node " + std::to_string(i) + " names an unknown arc end"};
      if (map.node_of(e) != i)
        problems.push_back("arc " + std::to_string(e.arc) + " is listed at the wrong node");
      ++seen[slot(e)];
    }
  }
  for (std::size_t s = 0; s < seen.size(); ++s)
    if (seen[s] != 1)
      problems.push_back("arc end " + std::to_string(s / 2) + "/" + std::to_string(s % 2) + " appears " +
                         std::to_string(seen[s]) + " times in rotations");
  if (!problems.empty()) return problems;

  try {
    const auto node_of_vertex = vertex_nodes(graph, map);
    for (int v = 0; v < graph.vertex_count(); ++v) {
      const auto& node = map.nodes[std::size_t(node_of_vertex[std::size_t(v)])];
      if (static_cast<int>(node.rotation.size()) != graph.degree(v))
        problems.push_back("vertex " + std::to_string(v) + " has degree " +
                           std::to_string(node.rotation.size()) + " in the diagram, " +
                           std::to_string(graph.degree(v)) + " in the graph");
    }
  } catch (const std::invalid_argument& e) {
    problems.push_back(e.what());
  }

  std::set<int> crossing_nodes;
  std::set<CrossingId> ids;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const auto& s = sites[i];
    if (s.node < 0 || s.node >= node_count || map.nodes[std::size_t(s.node)].kind != NodeKind::crossing ||
        map.nodes[std::size_t(s.node)].ref != s.id.value) {
      problems.push_back("crossing " + std::to_string(s.id.value) + " does not match its node");
      continue;
    }
    if (!ids.insert(s.id).second) problems.push_back("crossing id " + std::to_string(s.id.value) + " repeats");
    if (i > 0 && !(sites[i - 1].id < s.id)) problems.push_back("crossings are not sorted by id");
    crossing_nodes.insert(s.node);
    if (map.nodes[std::size_t(s.node)].rotation.size() != 4)
      problems.push_back("crossing " + std::to_string(s.id.value) + " is not 4-valent");
  }
  for (int i = 0; i < node_count; ++i)
    if (map.nodes[std::size_t(i)].kind == NodeKind::crossing && !crossing_nodes.count(i))
      problems.push_back("node " + std::to_string(i) + " is a crossing with no crossing record");
  if (!problems.empty()) return problems;

  try {
    edge_arc_chains(graph, map);
  } catch (const std::invalid_argument& e) {
    problems.push_back(std::string("smoothing does not recover the graph: ") + e.what());
  }

  int isolated = 0;
  for (const auto& node : map.nodes) isolated += node.rotation.empty();
  const int euler = node_count - static_cast<int>(map.arcs.size()) +
                    static_cast<int>(map.faces().size()) + isolated;
  if (euler != 2 * map.component_count())
    problems.push_back("Euler characteristic " + std::to_string(euler) + " is not planar");
  return problems;
}

std::vector<CrossingSite> sites_of(const Diagram& d) {
  std::vector<CrossingSite> sites;
  for (const auto& x : d.crossings) sites.push_back({x.id, x.node});
  return sites;
}

// Σ lk(N_i, S_i), enough to pick the mirror of the standard diagram.
int first_linking_entry(const Diagram& d, const PlumGraph& p) {
  int total = 0;
  for (int i = 1; i <= p.order(); ++i) {
    const std::array<Cycle, 2> pair{p.north_cycle(i), p.south_cycle(i)};
    const LinkDiagram link = restrict_to_cycles(d, pair);
    int raw = 0;
    for (int c = 0; c < link.crossing_count(); ++c)
      if (link.over_component_differs(c)) raw += link.sign(c);
    total += raw / 2;
  }
  return total;
}

}  // namespace

int PlanarMap::position(ArcEnd e) const {
  const auto& rot = nodes[std::size_t(node_of(e))].rotation;
  auto it = std::find(rot.begin(), rot.end(), e);
  if (it == rot.end()) throw std::invalid_argument("arc end missing from its node rotation");
  return static_cast<int>(it - rot.begin());
}

std::vector<std::vector<ArcEnd>> PlanarMap::faces() const {
  std::vector<int> pos(2 * arcs.size(), 0);
  for (const auto& node : nodes)
    for (std::size_t i = 0; i < node.rotation.size(); ++i) pos[slot(node.rotation[i])] = static_cast<int>(i);
  std::vector<bool> used(2 * arcs.size(), false);
  std::vector<std::vector<ArcEnd>> out;
  for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
    for (int end = 0; end < 2; ++end) {
      ArcEnd cur{a, end};
      if (used[slot(cur)]) continue;
      std::vector<ArcEnd> face;
      while (!used[slot(cur)]) {
        used[slot(cur)] = true;
        face.push_back(cur);
        const ArcEnd arrive = cur.twin();
        const auto& rot = nodes[std::size_t(node_of(arrive))].rotation;
        cur = rot[std::size_t((pos[slot(arrive)] + 1) % static_cast<int>(rot.size()))];
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

int PlanarMap::component_count() const {
  std::vector<int> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[std::size_t(x)] != x) x = parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
    return x;
  };
  int count = static_cast<int>(nodes.size());
  for (const auto& a : arcs) {
    const int x = find(a.tail);
    const int y = find(a.head);
    if (x != y) {
      parent[std::size_t(y)] = x;
      --count;
    }
  }
  return count;
}

std::vector<CrossingId> Diagram::crossing_ids() const {
  std::vector<CrossingId> ids;
  for (const auto& x : crossings) ids.push_back(x.id);
  return ids;
}

const Crossing& Diagram::crossing(CrossingId id) const {
  auto it = std::lower_bound(crossings.begin(), crossings.end(), id,
                             [](const Crossing& x, CrossingId v) { return x.id < v; });
  if (it == crossings.end() || it->id != id)
    throw std::invalid_argument("unknown crossing id " + std::to_string(id.value));
  return *it;
}

std::vector<std::vector<int>> edge_arc_chains(const PlanarGraph& graph, const PlanarMap& map) {
  const auto node_of_vertex = vertex_nodes(graph, map);
  std::vector<std::vector<int>> chains(std::size_t(graph.edge_count()));
  std::vector<bool> used(map.arcs.size(), false);
  std::vector<int> first(std::size_t(graph.edge_count()), -1);
  for (int a = 0; a < static_cast<int>(map.arcs.size()); ++a) {
    const auto& arc = map.arcs[std::size_t(a)];
    const ArcEnd start = PlanarMap::a_side(arc, a);
    const auto& node = map.nodes[std::size_t(map.node_of(start))];
    if (node.kind != NodeKind::vertex) continue;
    if (node.ref != graph.edge(arc.edge).a)
      throw std::invalid_argument("arc " + std::to_string(a) + " leaves the wrong endpoint of its edge");
    if (first[std::size_t(arc.edge)] != -1)
      throw std::invalid_argument("edge " + std::to_string(arc.edge) + " starts twice");
    first[std::size_t(arc.edge)] = a;
  }
  for (int e = 0; e < graph.edge_count(); ++e) {
    int cur = first[std::size_t(e)];
    if (cur == -1) throw std::invalid_argument("edge " + std::to_string(e) + " has no first arc");
    auto& chain = chains[std::size_t(e)];
    while (true) {
      if (used[std::size_t(cur)]) throw std::invalid_argument("edge " + std::to_string(e) + " revisits an arc");
      used[std::size_t(cur)] = true;
      chain.push_back(cur);
      const auto& arc = map.arcs[std::size_t(cur)];
      const ArcEnd exit = PlanarMap::a_side(arc, cur).twin();
      const int node_index = map.node_of(exit);
      const auto& node = map.nodes[std::size_t(node_index)];
      if (node.kind == NodeKind::vertex) {
        if (node_index != node_of_vertex[std::size_t(graph.edge(e).b)])
          throw std::invalid_argument("edge " + std::to_string(e) + " ends at the wrong vertex");
        break;
      }
      if (node.rotation.size() != 4) throw std::invalid_argument("crossing node is not 4-valent");
      const int p = map.position(exit);
      const ArcEnd through = node.rotation[std::size_t((p + 2) % 4)];
      const auto& next = map.arcs[std::size_t(through.arc)];
      if (next.edge != e || PlanarMap::a_side(next, through.arc) != through)
        throw std::invalid_argument("strand of edge " + std::to_string(e) + " does not pass straight through");
      cur = through.arc;
    }
  }
  for (std::size_t a = 0; a < used.size(); ++a)
    if (!used[a]) throw std::invalid_argument("arc " + std::to_string(a) + " belongs to no edge chain");
  return chains;
}

std::vector<std::string> validate_diagram(const Diagram& d) {
  auto problems = validate_map(d.graph, d.map, sites_of(d));
  if (!problems.empty()) return problems;
  for (const auto& x : d.crossings) {
    const auto& rot = d.map.nodes[std::size_t(x.node)].rotation;
    std::vector<ArcEnd> listed{x.over[0], x.over[1], x.under[0], x.under[1]};
    std::vector<ArcEnd> present(rot.begin(), rot.end());
    std::sort(listed.begin(), listed.end());
    std::sort(present.begin(), present.end());
    if (listed != present) {
      problems.push_back("crossing " + std::to_string(x.id.value) + " over/under ends do not match its node");
      continue;
    }
    const int p = d.map.position(x.over[0]);
    const int q = d.map.position(x.over[1]);
    if ((p - q + 4) % 4 != 2)
      problems.push_back("non-alternating crossing " + std::to_string(x.id.value) +
                         ": over strand ends are adjacent in the rotation");
  }
  return problems;
}

std::vector<std::string> validate_projection(const Projection& p) {
  return validate_map(p.graph, p.map, p.crossings);
}

Diagram standard_plum_diagram(int n) {
  const PlumGraph plum = build_plum_graph(n);
  const int c = plum.order();
  const int len = 2 * c;
  const int vcount = plum.graph.vertex_count();

  Diagram d;
  d.graph = plum.graph;
  auto& map = d.map;
  for (int v = 0; v < vcount; ++v) map.nodes.push_back({NodeKind::vertex, v, {}});
  for (int k = 0; k < c; ++k) map.nodes.push_back({NodeKind::crossing, k, {}});
  auto vertex_node = [](VertexId v) { return v; };
  auto crossing_node = [vcount](int k) { return vcount + k; };
  auto position_vertex = [&](int t) {
    const Edge& e = plum.graph.edge(plum.equator_edge(t));
    return e.a;
  };

  // The equator is a closed 2-braid. Equator position t lies in sector
  // t mod c, on the outer strand when t is even; edge t crosses into sector
  // t+1 through crossing (t+1) mod c and is cut there into arcs 2t, 2t+1.
  for (int t = 0; t < len; ++t) {
    const int x = crossing_node((t + 1) % c);
    map.arcs.push_back({plum.equator_edge(t), true, vertex_node(position_vertex(t)), x});
    map.arcs.push_back({plum.equator_edge(t), true, x, vertex_node(position_vertex(t + 1))});
  }
  const int north_base = 2 * len;
  const int south_base = north_base + c;
  for (int i = 1; i <= c; ++i)
    map.arcs.push_back({plum.north_spoke(i), true, vertex_node(plum.north), vertex_node(plum.u(i))});
  for (int i = 1; i <= c; ++i)
    map.arcs.push_back({plum.south_spoke(i), true, vertex_node(plum.south), vertex_node(plum.v(i))});
  auto north_arc = [&](int i) { return north_base + plum.wrap(i) - 1; };
  auto south_arc = [&](int i) { return south_base + plum.wrap(i) - 1; };

  for (int t = 0; t < len; ++t) {
    const ArcEnd out{2 * t, 0};
    const ArcEnd in{2 * ((t + len - 1) % len) + 1, 1};
    auto& rot = map.nodes[std::size_t(vertex_node(position_vertex(t)))].rotation;
    if (t % 2 == 0) {
      rot = {out, in, ArcEnd{north_arc(t / 2 + 1), 1}};  // spoke towards infinity
    } else {
      rot = {out, ArcEnd{south_arc(t / 2 + n + 2), 1}, in};  // spoke towards the centre
    }
  }
  for (int k = 0; k < c; ++k) {
    // Edges entering crossing k come from sector k-1: the even one on the
    // outer strand (heads inward), the odd one on the inner strand.
    int inner = (k - 1 + len) % len;
    int outer = (k - 1 + c + len) % len;
    if (inner % 2 != 0) std::swap(inner, outer);
    map.nodes[std::size_t(crossing_node(k))].rotation = {
        ArcEnd{2 * inner + 1, 0}, ArcEnd{2 * outer, 1}, ArcEnd{2 * inner, 1}, ArcEnd{2 * outer + 1, 0}};
  }
  // The north hub sits at infinity, so its counterclockwise order runs
  // through the sectors backwards; the south hub sits at the centre.
  for (int s = c - 1; s >= 0; --s) {
    const int t = s % 2 == 0 ? s : s + c;
    map.nodes[std::size_t(vertex_node(plum.north))].rotation.push_back({north_arc(t / 2 + 1), 0});
  }
  for (int s = 0; s < c; ++s) {
    const int t = s % 2 == 1 ? s : s + c;
    map.nodes[std::size_t(vertex_node(plum.south))].rotation.push_back({south_arc(t / 2 + n + 2), 0});
  }
  for (int k = 0; k < c; ++k)
    d.crossings.push_back(layered_crossing(map, CrossingId{k}, crossing_node(k), 1));

  if (first_linking_entry(d, plum) < 0) d = mirror(d);
  return d;
}

Diagram crossing_free_diagram(const PlanarGraph& g) {
  Diagram d;
  d.graph = g;
  for (int v = 0; v < g.vertex_count(); ++v) {
    MapNode node{NodeKind::vertex, v, {}};
    for (const auto& end : g.rotation(v)) node.rotation.push_back({end.edge, end.side});
    d.map.nodes.push_back(std::move(node));
  }
  for (const auto& e : g.edges()) d.map.arcs.push_back({e.id, true, e.a, e.b});
  return d;
}

Diagram trivial_plum_diagram(int n) { return crossing_free_diagram(build_plum_graph(n).graph); }

Projection cube_knotted_projection() { return projection_of(standard_plum_diagram(1)); }

Diagram crossing_change(const Diagram& d, CrossingId x) {
  Diagram out = d;
  auto it = std::find_if(out.crossings.begin(), out.crossings.end(), [x](const Crossing& c) { return c.id == x; });
  if (it == out.crossings.end()) throw std::invalid_argument("unknown crossing id " + std::to_string(x.value));
  std::swap(it->over, it->under);
  return out;
}

Diagram mirror(const Diagram& d) {
  Diagram out = d;
  for (auto& x : out.crossings) std::swap(x.over, x.under);
  return out;
}

Projection projection_of(const Diagram& d) { return {d.graph, d.map, sites_of(d)}; }

std::vector<Diagram> resolutions(const Projection& p, int cap) {
  const int c = p.crossing_count();
  if (c > cap) throw std::length_error("projection has " + std::to_string(c) + " crossings, cap is " + std::to_string(cap));
  std::vector<Diagram> out;
  out.reserve(std::size_t{1} << c);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    Diagram d;
    d.graph = p.graph;
    d.map = p.map;
    for (int i = 0; i < c; ++i) {
      const auto& site = p.crossings[std::size_t(i)];
      d.crossings.push_back(layered_crossing(p.map, site.id, site.node, int((mask >> i) & 1)));
    }
    out.push_back(std::move(d));
  }
  return out;
}

LinkDiagram restrict_to_cycles(const Diagram& d, std::span<const Cycle> cycles) {
  if (cycles.empty() || cycles.size() > 2) throw std::invalid_argument("restrict needs one or two cycles");
  for (const auto& cyc : cycles)
    if (auto problems = cyc.validate(d.graph); !problems.empty())
      throw std::invalid_argument("not a simple cycle: " + problems.front());
  if (cycles.size() == 2 && !vertex_disjoint(d.graph, cycles[0], cycles[1]))
    throw std::invalid_argument("cycles are not vertex-disjoint");

  const auto chains = edge_arc_chains(d.graph, d.map);
  struct Pass {
    int node;
    ArcEnd in;
    ArcEnd out;
  };
  std::vector<std::vector<Pass>> passes(cycles.size());
  std::map<int, int> pass_count;
  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    std::vector<ArcEnd> entries;  // arc end where the traversal enters each arc
    for (const auto& step : cycles[ci].steps()) {
      auto chain = chains[std::size_t(step.edge)];
      if (!step.forward) std::reverse(chain.begin(), chain.end());
      for (int a : chain) {
        const bool aligned = d.map.arcs[std::size_t(a)].forward == step.forward;
        entries.push_back({a, aligned ? 0 : 1});
      }
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const ArcEnd exit = entries[i].twin();
      const ArcEnd next = entries[(i + 1) % entries.size()];
      const int node = d.map.node_of(exit);
      if (d.map.nodes[std::size_t(node)].kind != NodeKind::crossing) continue;
      passes[ci].push_back({node, exit, next});
      ++pass_count[node];
    }
  }

  LinkDiagram link;
  link.components = static_cast<int>(cycles.size());
  std::map<int, int> new_index;  // crossing node -> link crossing, in id order
  {
    std::vector<std::pair<int, int>> kept;  // (crossing id, node)
    for (const auto& [node, count] : pass_count)
      if (count == 2) kept.emplace_back(d.map.nodes[std::size_t(node)].ref, node);
    std::sort(kept.begin(), kept.end());
    for (const auto& [id, node] : kept) new_index.emplace(node, static_cast<int>(new_index.size()));
  }
  std::map<ArcEnd, ArcEnd> translate;
  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    std::vector<Pass> kept;
    for (const auto& p : passes[ci])
      if (new_index.count(p.node)) kept.push_back(p);
    const int base = static_cast<int>(link.arcs.size());
    const int r = static_cast<int>(kept.size());
    for (int j = 0; j < r; ++j) {
      const auto& from = kept[std::size_t(j)];
      const auto& to = kept[std::size_t((j + 1) % r)];
      link.arcs.push_back({static_cast<int>(ci), new_index.at(from.node), new_index.at(to.node)});
      translate[from.out] = {base + j, 0};
      translate[to.in] = {base + j, 1};
    }
  }
  link.crossings.resize(new_index.size());
  for (const auto& [node, index] : new_index) {
    const auto& rot = d.map.nodes[std::size_t(node)].rotation;
    const Crossing& x = d.crossing(CrossingId{d.map.nodes[std::size_t(node)].ref});
    auto& lc = link.crossings[std::size_t(index)];
    for (int p = 0; p < 4; ++p) lc.rotation[std::size_t(p)] = translate.at(rot[std::size_t(p)]);
    lc.over = over_parity(d.map, x);
    lc.origin = x.id;
  }
  return link;
}

std::array<EdgeId, 2> crossing_edges(const Diagram& d, CrossingId x) {
  const Crossing& c = d.crossing(x);
  return {d.map.arcs[std::size_t(c.over[0].arc)].edge, d.map.arcs[std::size_t(c.under[0].arc)].edge};
}

int crossing_sign(const Diagram& d, CrossingId x) {
  const Crossing& c = d.crossing(x);
  auto outgoing = [&](const std::array<ArcEnd, 2>& strand) {
    const ArcEnd first = strand[0];
    return PlanarMap::a_side(d.map.arcs[std::size_t(first.arc)], first.arc) == first ? strand[0] : strand[1];
  };
  const ArcEnd over_out = outgoing(c.over);
  const ArcEnd under_out = outgoing(c.under);
  const auto& rot = d.map.nodes[std::size_t(c.node)].rotation;
  return rot[std::size_t((d.map.position(over_out) + 1) % 4)] == under_out ? 1 : -1;
}

Diagram insert_kink(const Diagram& d, int arc, bool left, bool first_over) {
  if (arc < 0 || arc >= static_cast<int>(d.map.arcs.size())) throw std::invalid_argument("unknown arc");
  Diagram out = d;
  auto& map = out.map;
  const DiagramArc original = map.arcs[std::size_t(arc)];
  const int x = static_cast<int>(map.nodes.size());
  const CrossingId id{max_crossing_id(d) + 1};
  const int loop = static_cast<int>(map.arcs.size());
  const int rest = loop + 1;
  replace_end(out, {arc, 1}, {rest, 1});
  map.arcs[std::size_t(arc)].head = x;
  map.arcs.push_back({original.edge, original.forward, x, x});
  map.arcs.push_back({original.edge, original.forward, x, original.head});
  // Strands: arc -> loop and loop -> rest pass straight through x.
  MapNode node{NodeKind::crossing, id.value, {}};
  if (left) {
    node.rotation = {ArcEnd{loop, 0}, ArcEnd{loop, 1}, ArcEnd{arc, 1}, ArcEnd{rest, 0}};
  } else {
    node.rotation = {ArcEnd{loop, 1}, ArcEnd{loop, 0}, ArcEnd{rest, 0}, ArcEnd{arc, 1}};
  }
  map.nodes.push_back(std::move(node));
  const int first_parity = map.position({arc, 1}) % 2;
  out.crossings.push_back(layered_crossing(map, id, x, first_over ? first_parity : 1 - first_parity));
  return out;
}

Diagram insert_finger(const Diagram& d, ArcEnd target, ArcEnd pusher, bool finger_over) {
  const int arc_count = static_cast<int>(d.map.arcs.size());
  if (target.arc < 0 || target.arc >= arc_count || pusher.arc < 0 || pusher.arc >= arc_count)
    throw std::invalid_argument("unknown arc");
  if (target.arc == pusher.arc) throw std::invalid_argument("finger needs two different arcs");
  bool shared = false;
  for (const auto& face : d.map.faces()) {
    const bool has_target = std::find(face.begin(), face.end(), target) != face.end();
    const bool has_pusher = std::find(face.begin(), face.end(), pusher) != face.end();
    if (has_target || has_pusher) {
      shared = has_target && has_pusher;
      if (shared) break;
    }
  }
  if (!shared) throw std::invalid_argument("darts do not bound a common face");

  Diagram out = d;
  auto& map = out.map;
  const int x = static_cast<int>(map.nodes.size());
  const int y = x + 1;
  const CrossingId x_id{max_crossing_id(d) + 1};
  const CrossingId y_id{x_id.value + 1};

  // Cut an arc into three pieces along the dart's direction of travel:
  // start -> first_cut -> second_cut -> far end. Returns the piece indices.
  auto cut = [&](ArcEnd dart, int first_cut, int second_cut) {
    const int s = dart.end;  // end of each piece where travel starts
    const DiagramArc original = map.arcs[std::size_t(dart.arc)];
    const int far = s == 0 ? original.head : original.tail;
    const int mid = static_cast<int>(map.arcs.size());
    const int last = mid + 1;
    auto set_nodes = [s](DiagramArc& a, int from, int to) {
      a.tail = s == 0 ? from : to;
      a.head = s == 0 ? to : from;
    };
    DiagramArc piece = original;
    set_nodes(piece, first_cut, second_cut);
    map.arcs.push_back(piece);
    set_nodes(piece, second_cut, far);
    map.arcs.push_back(piece);
    replace_end(out, {dart.arc, 1 - s}, {last, 1 - s});
    set_nodes(map.arcs[std::size_t(dart.arc)], map.node_of({dart.arc, s}), first_cut);
    return std::array<int, 3>{dart.arc, mid, last};
  };
  // Travelling along the target, the finger is met first at x then at y;
  // travelling along the pusher, it rises at y and comes back down at x.
  map.nodes.push_back({NodeKind::crossing, x_id.value, {}});
  map.nodes.push_back({NodeKind::crossing, y_id.value, {}});
  const auto t = cut(target, x, y);
  const auto f = cut(pusher, y, x);
  const int st = target.end;
  const int sf = pusher.end;
  map.nodes[std::size_t(x)].rotation = {ArcEnd{t[1], st}, ArcEnd{f[1], 1 - sf}, ArcEnd{t[0], 1 - st}, ArcEnd{f[2], sf}};
  map.nodes[std::size_t(y)].rotation = {ArcEnd{t[2], st}, ArcEnd{f[1], sf}, ArcEnd{t[1], 1 - st}, ArcEnd{f[0], 1 - sf}};
  const int parity = finger_over ? 1 : 0;
  out.crossings.push_back(layered_crossing(map, x_id, x, parity));
  out.crossings.push_back(layered_crossing(map, y_id, y, parity));
  return out;
}

}  // namespace plum
