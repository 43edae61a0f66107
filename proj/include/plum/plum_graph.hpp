#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plum/graph.hpp"

namespace plum {

enum class EdgeRole { equatorial, north_spoke, south_spoke };

/// The plum graph on 4n+4 vertices: an equator of length 4n+2 whose
/// vertices alternate between u_i (joined to the north pole) and v_i (joined
/// to the south pole), with oriented region cycles N_i and S_i.
///
/// Suffixes run 1..2n+1 and wrap modulo 2n+1. Ids are dense:
///   vertex 0 = north pole, 1 = south pole, 2.. = u_1..u_m, m+2.. = v_1..v_m;
///   edges 0..2m-1 follow the equator (edge t joins equator positions t and
///   t+1), 2m.. are north spokes pole -> u_i, 3m.. are south spokes pole -> v_i.
class PlumGraph {
 public:
  int n = 0;
  PlanarGraph graph;
  VertexId north = 0;
  VertexId south = 1;
  Cycle equator;
  std::vector<Cycle> north_cycles;  // index i-1 holds N_i
  std::vector<Cycle> south_cycles;  // index i-1 holds S_i

  int order() const { return 2 * n + 1; }
  /// Reduces any integer suffix into 1..2n+1.
  int wrap(int suffix) const;

  VertexId u(int suffix) const { return 2 + wrap(suffix) - 1; }
  VertexId v(int suffix) const { return 2 + order() + wrap(suffix) - 1; }
  EdgeId north_spoke(int suffix) const { return 2 * order() + wrap(suffix) - 1; }
  EdgeId south_spoke(int suffix) const { return 3 * order() + wrap(suffix) - 1; }
  /// Equator edge joining positions `position` and `position + 1`.
  EdgeId equator_edge(int position) const;
  /// Equator edge between two given vertices; throws if they are not consecutive.
  EdgeId equator_edge_between(VertexId x, VertexId y) const;

  const Cycle& north_cycle(int suffix) const { return north_cycles.at(std::size_t(wrap(suffix) - 1)); }
  const Cycle& south_cycle(int suffix) const { return south_cycles.at(std::size_t(wrap(suffix) - 1)); }

  EdgeRole role(EdgeId e) const;

  /// "vN", "vS", "u3", "v7".
  const std::string& label(VertexId v) const { return labels_.at(std::size_t(v)); }
  std::optional<VertexId> vertex(std::string_view label) const;
  std::string edge_label(EdgeId e) const;

  friend PlumGraph build_plum_graph(int n);

 private:
  std::vector<std::string> labels_;
  std::map<std::string, VertexId, std::less<>> by_label_;
  std::vector<VertexId> equator_order_;
};

/// Throws std::invalid_argument for n < 1.
PlumGraph build_plum_graph(int n);

/// n when `g` is exactly build_plum_graph(n).graph (same ids and rotation).
std::optional<int> detect_plum_order(const PlanarGraph& g);

}  // namespace plum
