#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace plum {

using VertexId = int;
using EdgeId = int;

/// One end of an edge, seen from the vertex it is attached to.
/// side 0 is the edge's first endpoint, side 1 its second.
struct EdgeEnd {
  EdgeId edge = 0;
  int side = 0;

  EdgeEnd twin() const { return {edge, 1 - side}; }
  friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

struct Edge {
  EdgeId id = 0;
  VertexId a = 0;
  VertexId b = 0;

  bool is_loop() const { return a == b; }
  VertexId endpoint(int side) const { return side == 0 ? a : b; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Multigraph with dense vertex/edge ids and a rotation system: for every
/// vertex the counterclockwise cyclic order of the edge ends attached to it.
/// Loops contribute two ends to their vertex.
class PlanarGraph {
 public:
  PlanarGraph() = default;

  /// Takes an explicit rotation system. Throws std::invalid_argument when an
  /// endpoint is out of range or the rotation does not list each edge end
  /// exactly once at its own vertex.
  PlanarGraph(int vertex_count, std::vector<std::array<VertexId, 2>> endpoints,
              std::vector<std::vector<EdgeEnd>> rotation);

  /// Rotation taken from incidence order. Fine for purely combinatorial
  /// work (cycles, trees, bounds); not necessarily a sphere embedding.
  static PlanarGraph from_edges(int vertex_count,
                                std::vector<std::array<VertexId, 2>> endpoints);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  const std::vector<EdgeEnd>& rotation(VertexId v) const {
    return rotation_.at(static_cast<std::size_t>(v));
  }
  const std::vector<std::vector<EdgeEnd>>& rotations() const { return rotation_; }

  /// Loops count twice.
  int degree(VertexId v) const { return static_cast<int>(rotation(v).size()); }
  VertexId vertex_of(EdgeEnd end) const { return edge(end.edge).endpoint(end.side); }

  /// Neighbour across `e` from `v`; for a loop returns `v`.
  VertexId opposite(EdgeId e, VertexId v) const;
  bool adjacent_edges(EdgeId e, EdgeId f) const;

  /// Face boundaries of the rotation system, each a cyclic list of departing
  /// edge ends. Deterministic order.
  std::vector<std::vector<EdgeEnd>> faces() const;

  int component_count() const;
  bool connected() const { return component_count() <= 1; }

  /// Empty iff the rotation is a genus-0 embedding of every component
  /// (V - E + F = 2 per component).
  std::vector<std::string> validate() const;

  friend bool operator==(const PlanarGraph&, const PlanarGraph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeEnd>> rotation_;
};

struct CycleStep {
  EdgeId edge = 0;
  bool forward = true;  // traversed from endpoint a to endpoint b
  friend auto operator<=>(const CycleStep&, const CycleStep&) = default;
};

/// Oriented closed walk given by its edge sequence.
class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(std::vector<CycleStep> steps) : steps_(std::move(steps)) {}

  const std::vector<CycleStep>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }

  /// Start vertex of every step, in order.
  std::vector<VertexId> vertices(const PlanarGraph& g) const;
  bool contains_edge(EdgeId e) const;
  /// +1 when the cycle runs along e's reference orientation, -1 against it,
  /// 0 when e is not on the cycle.
  int traversal_sign(EdgeId e) const;

  Cycle reversed() const;
  /// Least rotation over both orientations; equal for any two descriptions
  /// of the same unoriented cycle.
  Cycle canonical() const;

  /// Empty iff consecutive steps chain, the walk closes, and no vertex repeats.
  std::vector<std::string> validate(const PlanarGraph& g) const;

  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  std::vector<CycleStep> steps_;
};

bool vertex_disjoint(const PlanarGraph& g, const Cycle& x, const Cycle& y);

/// Every simple cycle once, in canonical form, sorted.
std::vector<Cycle> enumerate_cycles(const PlanarGraph& g);

/// Unordered pairs of vertex-disjoint simple cycles (first < second).
std::vector<std::pair<Cycle, Cycle>> disjoint_cycle_pairs(const PlanarGraph& g);

struct SpanningTree {
  std::vector<EdgeId> edges;  // sorted
  VertexId root = 0;

  friend auto operator<=>(const SpanningTree&, const SpanningTree&) = default;
};

enum class TreeStrategy { bfs, dfs };

/// Throws std::invalid_argument on a disconnected graph or bad root.
SpanningTree spanning_tree(const PlanarGraph& g, TreeStrategy strategy, VertexId root = 0);

/// All spanning trees rooted at `root`. Throws std::length_error once more
/// than `cap` trees exist.
std::vector<SpanningTree> all_spanning_trees(const PlanarGraph& g, VertexId root = 0,
                                             std::size_t cap = 200000);

/// Empty iff `t` is acyclic, connected, and spans every vertex of `g`.
std::vector<std::string> validate_tree(const PlanarGraph& g, const SpanningTree& t);

/// Parent edge (-1 at the root) and depth of every vertex in the rooted tree.
struct RootedTree {
  std::vector<EdgeId> parent_edge;
  std::vector<int> depth;
  std::vector<int> tree_degree;
};
RootedTree root_tree(const PlanarGraph& g, const SpanningTree& t);

}  // namespace plum
