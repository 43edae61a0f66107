#include "plum/plum_graph.hpp"

#include <stdexcept>

namespace plum {

int PlumGraph::wrap(int suffix) const {
  const int m = order();
  return ((suffix - 1) % m + m) % m + 1;
}

EdgeId PlumGraph::equator_edge(int position) const {
  const int len = 2 * order();
  return ((position % len) + len) % len;
}

EdgeId PlumGraph::equator_edge_between(VertexId x, VertexId y) const {
  const int len = 2 * order();
  int px = -1;
  int py = -1;
  for (int p = 0; p < len; ++p) {
    if (equator_order_[std::size_t(p)] == x) px = p;
    if (equator_order_[std::size_t(p)] == y) py = p;
  }
  if (px < 0 || py < 0) throw std::invalid_argument("vertex is not on the equator");
  if ((px + 1) % len == py) return px;
  if ((py + 1) % len == px) return py;
  throw std::invalid_argument("vertices are not consecutive on the equator");
}

EdgeRole PlumGraph::role(EdgeId e) const {
  const int m = order();
  if (e < 0 || e >= 4 * m) throw std::out_of_range("edge id out of range");
  if (e < 2 * m) return EdgeRole::equatorial;
  return e < 3 * m ? EdgeRole::north_spoke : EdgeRole::south_spoke;
}

std::optional<VertexId> PlumGraph::vertex(std::string_view label) const {
  if (auto it = by_label_.find(label); it != by_label_.end()) return it->second;
  return std::nullopt;
}

std::string PlumGraph::edge_label(EdgeId e) const {
  const Edge& ed = graph.edge(e);
  return label(ed.a) + "-" + label(ed.b);
}

PlumGraph build_plum_graph(int n) {
  if (n < 1) throw std::invalid_argument("plum graph needs n >= 1");
  PlumGraph p;
  p.n = n;
  const int m = p.order();
  const int len = 2 * m;
  const int vertex_count = 2 * m + 2;

  p.labels_.resize(std::size_t(vertex_count));
  p.labels_[0] = "vN";
  p.labels_[1] = "vS";
  for (int i = 1; i <= m; ++i) {
    p.labels_[std::size_t(p.u(i))] = "u" + std::to_string(i);
    p.labels_[std::size_t(p.v(i))] = "v" + std::to_string(i);
  }
  for (int v = 0; v < vertex_count; ++v) p.by_label_.emplace(p.labels_[std::size_t(v)], v);

  // u_1, v_{n+2}, u_2, v_{n+3}, ..., u_m, v_{n+1}
  p.equator_order_.resize(std::size_t(len));
  for (int i = 1; i <= m; ++i) {
    p.equator_order_[std::size_t(2 * (i - 1))] = p.u(i);
    p.equator_order_[std::size_t(2 * (i - 1) + 1)] = p.v(i + n + 1);
  }

  std::vector<std::array<VertexId, 2>> endpoints;
  for (int t = 0; t < len; ++t)
    endpoints.push_back({p.equator_order_[std::size_t(t)], p.equator_order_[std::size_t((t + 1) % len)]});
  for (int i = 1; i <= m; ++i) endpoints.push_back({p.north, p.u(i)});
  for (int i = 1; i <= m; ++i) endpoints.push_back({p.south, p.v(i)});

  // Sphere embedding: equator drawn as a counterclockwise circle, north pole
  // at its centre, south pole at infinity.
  std::vector<std::vector<EdgeEnd>> rotation(static_cast<std::size_t>(vertex_count));
  for (int t = 0; t < len; ++t) {
    const VertexId x = p.equator_order_[std::size_t(t)];
    const EdgeEnd next{t, 0};
    const EdgeEnd prev{(t + len - 1) % len, 1};
    if (t % 2 == 0) {
      rotation[std::size_t(x)] = {next, {p.north_spoke(t / 2 + 1), 1}, prev};
    } else {
      rotation[std::size_t(x)] = {{p.south_spoke(t / 2 + n + 2), 1}, next, prev};
    }
  }
  for (int i = 1; i <= m; ++i) rotation[std::size_t(p.north)].push_back({p.north_spoke(i), 0});
  for (int t = len - 1; t >= 1; t -= 2)
    rotation[std::size_t(p.south)].push_back({p.south_spoke(t / 2 + n + 2), 0});

  p.graph = PlanarGraph(vertex_count, std::move(endpoints), std::move(rotation));

  std::vector<CycleStep> eq;
  for (int t = 0; t < len; ++t) eq.push_back({t, true});
  p.equator = Cycle(std::move(eq));

  for (int i = 1; i <= m; ++i) {
    // N_i = u_i v_{i+n+1} u_{i+1} vN u_i
    p.north_cycles.emplace_back(std::vector<CycleStep>{{p.equator_edge(2 * (i - 1)), true},
                                                       {p.equator_edge(2 * (i - 1) + 1), true},
                                                       {p.north_spoke(i + 1), false},
                                                       {p.north_spoke(i), true}});
    // S_i = v_i u_{i+n+1} v_{i+1} vS v_i; v_i sits at equator position
    // 2(i-n-2)+1.
    const int pos = 2 * (p.wrap(i - n - 1) - 1) + 1;
    p.south_cycles.emplace_back(std::vector<CycleStep>{{p.equator_edge(pos), true},
                                                       {p.equator_edge(pos + 1), true},
                                                       {p.south_spoke(i + 1), false},
                                                       {p.south_spoke(i), true}});
  }
  return p;
}

std::optional<int> detect_plum_order(const PlanarGraph& g) {
  const int v = g.vertex_count();
  if (v < 8 || (v - 4) % 4 != 0) return std::nullopt;
  const int n = (v - 4) / 4;
  if (g == build_plum_graph(n).graph) return n;
  return std::nullopt;
}

}  // namespace plum
