#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plum/diagram.hpp"
#include "plum/graph.hpp"
#include "plum/link_diagram.hpp"

namespace plum {

/// Strand multiplicity of every edge when the tree is shrunk towards its
/// root: 1 off the tree; on a tree edge, the sum over the other edge ends at
/// its far endpoint (a loop counts twice), or 1 when that sum is empty.
/// Throws std::invalid_argument for an invalid tree.
std::vector<std::int64_t> branch_indices(const PlanarGraph& g, const SpanningTree& t);

/// Sum of k_u (l_u - 1) over vertices with tree degree l_u >= 3, where
/// k_u = floor((deg u - 1) / 2).
std::int64_t reorder_cost(const PlanarGraph& g, const SpanningTree& t);

/// Constants of the linear bound u <= A c + B, kept exactly through
/// a = (max branch index)^2 and the reorder cost b: A = a/2, B = ab/2.
struct BoundConstants {
  SpanningTree tree;
  std::vector<int> k;  // per vertex
  std::vector<int> l;  // per vertex
  std::vector<std::int64_t> branch;
  std::int64_t b = 0;
  std::int64_t a = 0;

  double A() const { return static_cast<double>(a) / 2; }
  double B() const { return static_cast<double>(a) * static_cast<double>(b) / 2; }
  /// A c + B.
  double evaluate(std::int64_t crossings) const { return A() * static_cast<double>(crossings) + B(); }
  /// Twice the bound, exact.
  std::int64_t evaluate_doubled(std::int64_t crossings) const { return a * crossings + a * b; }
};

BoundConstants tree_bound_constants(const PlanarGraph& g, const SpanningTree& t);

/// Exhaustive minimum of (A, B) over all spanning trees and roots; ties go
/// to the smaller (edge list, root). Throws std::length_error past the
/// tree cap.
BoundConstants optimize_constants(const PlanarGraph& g, std::size_t tree_cap = 200000);

/// floor(c / 2).
int trivializable_bound(int crossings);

/// Traversal order of the non-tree edges: each listed edge is walked in the
/// given direction, earlier steps first.
using EdgeOrder = std::vector<CycleStep>;

/// Non-tree edges in id order, each along its reference orientation.
EdgeOrder default_edge_order(const PlanarGraph& g, const SpanningTree& t);

struct DescendingChange {
  std::vector<CrossingId> changed;  // sorted
  int crossing_count = 0;
  bool complement = false;  // the complement of the ascending set was smaller
};

/// Crossings where the strand met earlier in the traversal passes under
/// form the set A. Returns the smaller of A and its complement. Throws
/// std::invalid_argument when some crossing is not met twice by the listed
/// edges (for instance when it involves a tree edge).
DescendingChange descending_change_set(const Diagram& d, const SpanningTree& t, const EdgeOrder& order);

enum class Layering { descending, ascending, mixed };

/// Whether the earlier strand goes over everywhere, under everywhere, or
/// neither. An empty diagram counts as descending.
Layering layering(const Diagram& d, const EdgeOrder& order);

/// Link version: components taken in index order, each walked from its
/// lowest-numbered arc. Crossing ids are link crossing indices.
DescendingChange descending_change_set(const LinkDiagram& d);
Layering layering(const LinkDiagram& d);

/// Applies a change set to a diagram.
Diagram apply_changes(const Diagram& d, const std::vector<CrossingId>& changed);
LinkDiagram apply_changes(const LinkDiagram& d, const std::vector<CrossingId>& changed);

}  // namespace plum
