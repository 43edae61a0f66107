#pragma once

// Slow, independent recomputations used to cross-check the library.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "plum/diagram.hpp"
#include "plum/graph.hpp"
#include "plum/link_diagram.hpp"

namespace plum::check {

/// |Jones polynomial at -1| by a Kauffman-bracket state sum. At
/// A = exp(i pi/4) the loop value vanishes, so only one-loop states count
/// and the sum is a Gaussian integer. Up to 24 crossings.
std::int64_t bracket_determinant(const LinkDiagram& d);

/// Branch indices by memoised recursion outward from the root.
std::vector<std::int64_t> memo_branch_indices(const PlanarGraph& g, const SpanningTree& t);

/// Simple cycles counted as edge subsets that are connected and 2-regular
/// on their support. Up to 24 edges.
std::int64_t brute_force_cycle_count(const PlanarGraph& g);

/// Spanning trees by the matrix-tree theorem, loops ignored.
std::int64_t kirchhoff_tree_count(const PlanarGraph& g);

/// Minimum sum |phi| over all coefficient vectors with sum |phi| <= max_cost
/// reaching `target` exactly; nullopt if none does.
std::optional<int> brute_force_min_l1(const std::vector<std::vector<int>>& generators,
                                      const std::vector<int>& target, int max_cost);

/// One random Reidemeister I or II edit. When `allowed` is given, only arcs
/// of edges flagged there are touched.
Diagram random_edit(const Diagram& d, std::mt19937& rng, const std::vector<bool>* allowed = nullptr);

/// Connected multigraph with loops and parallel edges; rotation taken from
/// incidence order.
PlanarGraph random_multigraph(std::mt19937& rng, int max_vertices, int extra_edges);

/// Triangle, theta (two vertices, three parallel edges) and cycle graphs
/// with sphere rotations.
PlanarGraph triangle_graph();
PlanarGraph theta_graph();
PlanarGraph cycle_graph(int length);

}  // namespace plum::check
