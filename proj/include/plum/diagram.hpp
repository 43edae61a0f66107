#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plum/graph.hpp"
#include "plum/link_diagram.hpp"

namespace plum {

/// Piece of an abstract edge between two consecutive nodes of a diagram.
/// `forward` says whether tail -> head runs along the edge's reference
/// orientation (endpoint a towards endpoint b).
struct DiagramArc {
  EdgeId edge = 0;
  bool forward = true;
  int tail = 0;  // node index
  int head = 0;
  friend bool operator==(const DiagramArc&, const DiagramArc&) = default;
};

enum class NodeKind { vertex, crossing };

struct MapNode {
  NodeKind kind = NodeKind::vertex;
  int ref = 0;                   // vertex id, or crossing id value
  std::vector<ArcEnd> rotation;  // counterclockwise
  friend bool operator==(const MapNode&, const MapNode&) = default;
};

/// Planar map shared by diagrams and projections: graph vertices and
/// 4-valent crossings joined by arcs.
struct PlanarMap {
  std::vector<MapNode> nodes;
  std::vector<DiagramArc> arcs;

  int node_of(ArcEnd e) const {
    const auto& a = arcs[std::size_t(e.arc)];
    return e.end == 0 ? a.tail : a.head;
  }
  /// Index of `e` in its node's rotation.
  int position(ArcEnd e) const;
  std::vector<std::vector<ArcEnd>> faces() const;
  int component_count() const;
  /// The end of an arc that faces the edge's endpoint a.
  static ArcEnd a_side(const DiagramArc& arc, int index) { return {index, arc.forward ? 0 : 1}; }

  friend bool operator==(const PlanarMap&, const PlanarMap&) = default;
};

struct CrossingSite {
  CrossingId id;
  int node = 0;
  friend bool operator==(const CrossingSite&, const CrossingSite&) = default;
};

struct Crossing {
  CrossingId id;
  int node = 0;
  std::array<ArcEnd, 2> over{};
  std::array<ArcEnd, 2> under{};
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Diagram of a spatial embedding of `graph`. Crossings are sorted by id.
struct Diagram {
  PlanarGraph graph;
  PlanarMap map;
  std::vector<Crossing> crossings;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  std::vector<CrossingId> crossing_ids() const;
  const Crossing& crossing(CrossingId id) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

/// A diagram with the over/under information forgotten.
struct Projection {
  PlanarGraph graph;
  PlanarMap map;
  std::vector<CrossingSite> crossings;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  friend bool operator==(const Projection&, const Projection&) = default;
};

/// Empty iff every structural invariant holds. Violations are
/// human-readable; a crossing whose over ends are not opposite reports
/// "non-alternating crossing".
std::vector<std::string> validate_diagram(const Diagram& d);
std::vector<std::string> validate_projection(const Projection& p);

/// Arcs of every edge in order from endpoint a to endpoint b, found by
/// smoothing all crossings. Throws std::invalid_argument if the chains do
/// not reconstruct the abstract graph.
std::vector<std::vector<int>> edge_arc_chains(const PlanarGraph& graph, const PlanarMap& map);

/// Standard diagram of the plum graph: the equator drawn as the closed
/// positive 2-braid with 2n+1 crossings, poles inside and outside, spokes
/// crossing-free. The first linking-vector entry is +(2n+1).
Diagram standard_plum_diagram(int n);

/// Crossing-free diagram drawn along the graph's own rotation system, one
/// arc per edge.
Diagram crossing_free_diagram(const PlanarGraph& g);

/// Crossing-free diagram of the sphere embedding.
Diagram trivial_plum_diagram(int n);

/// Knotted projection of the cube (viewed as the n = 1 plum graph): three
/// crossings, each between two equatorial edges.
Projection cube_knotted_projection();

/// Throws std::invalid_argument for an unknown id.
Diagram crossing_change(const Diagram& d, CrossingId x);
Diagram mirror(const Diagram& d);
Projection projection_of(const Diagram& d);

/// All 2^c over/under choices. Bit i of the counter picks the layering of
/// the i-th crossing in id order: 0 puts rotation positions 0 and 2 over, 1
/// puts positions 1 and 3 over. Throws std::length_error above `cap`.
std::vector<Diagram> resolutions(const Projection& p, int cap = 20);

/// Sub-diagram of one cycle (a knot) or two vertex-disjoint cycles (a
/// 2-component link). Components follow the cycles' orientations; component
/// i is cycles[i]. Throws std::invalid_argument for bad input.
LinkDiagram restrict_to_cycles(const Diagram& d, std::span<const Cycle> cycles);

/// Abstract edges carrying the over and under strands at `x`.
std::array<EdgeId, 2> crossing_edges(const Diagram& d, CrossingId x);

/// Sign of `x` when both strands are oriented along their edges' reference
/// orientations.
int crossing_sign(const Diagram& d, CrossingId x);

/// Reidemeister I: adds a one-crossing loop in the middle of `arc`. The
/// loop's bounded face lies counterclockwise of the arc's direction when
/// `left`; the first pass is over when `first_over`.
Diagram insert_kink(const Diagram& d, int arc, bool left, bool first_over);

/// Reidemeister II: pushes a finger of the arc of `pusher` across the arc
/// of `target`. Both darts must bound the same face and lie on different
/// arcs. The finger passes over when `finger_over`.
Diagram insert_finger(const Diagram& d, ArcEnd target, ArcEnd pusher, bool finger_over);

}  // namespace plum
