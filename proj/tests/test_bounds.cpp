#include <doctest.h>

#include <random>
#include <stdexcept>

#include "check/oracles.hpp"
#include "plum/bounds.hpp"
#include "plum/diagram.hpp"
#include "plum/plum_graph.hpp"

using namespace plum;

namespace {

std::vector<bool> off_tree(const PlanarGraph& g, const SpanningTree& t) {
  std::vector<bool> allowed(std::size_t(g.edge_count()), true);
  for (EdgeId e : t.edges) allowed[std::size_t(e)] = false;
  return allowed;
}

}  // namespace

TEST_CASE("branch indices match the memoised oracle") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 80; ++trial) {
    const PlanarGraph g = check::random_multigraph(rng, 9, 8);
    std::uniform_int_distribution<int> root(0, g.vertex_count() - 1);
    const SpanningTree t = spanning_tree(g, trial % 2 ? TreeStrategy::dfs : TreeStrategy::bfs, root(rng));
    CAPTURE(trial);
    CHECK(branch_indices(g, t) == check::memo_branch_indices(g, t));
  }
}

TEST_CASE("cycles and the triangle give A = 1/2, B = 0") {
  for (int k = 1; k <= 8; ++k) {
    const PlanarGraph g = check::cycle_graph(k);
    for (VertexId r = 0; r < k; ++r) {
      const BoundConstants c = tree_bound_constants(g, spanning_tree(g, TreeStrategy::bfs, r));
      CHECK(c.a == 1);
      CHECK(c.b == 0);
      CHECK(c.A() == doctest::Approx(0.5));
      CHECK(c.B() == doctest::Approx(0.0));
    }
    const BoundConstants best = optimize_constants(g);
    CHECK(best.a == 1);
    CHECK(best.b == 0);
  }
}

TEST_CASE("degree three with tree degree two does not force A = 1/2") {
  // Theta graph: two vertices, three parallel edges. Every spanning tree is
  // one edge whose far end carries the two others, so a = 4.
  const PlanarGraph theta = check::theta_graph();
  const BoundConstants best = optimize_constants(theta);
  CHECK(best.a == 4);
  CHECK(best.b == 0);
  CHECK(best.A() == doctest::Approx(2.0));
  for (const auto& t : all_spanning_trees(theta)) CHECK(root_tree(theta, t).tree_degree[0] <= 2);
}

TEST_CASE("reorder cost counts only branching vertices") {
  const PlanarGraph star = PlanarGraph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}});
  const SpanningTree t{{0, 1, 2, 3}, 0};
  // The centre has degree 4 and tree degree 4: k = 1, l = 4.
  CHECK(reorder_cost(star, t) == 3);
  // K_{1,5} as its own tree: k = 2, l = 5 at the centre.
  const PlanarGraph k15 = PlanarGraph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  CHECK(reorder_cost(k15, SpanningTree{{0, 1, 2, 3, 4}, 0}) == 8);
  const PlanarGraph path = check::cycle_graph(5);
  CHECK(reorder_cost(path, spanning_tree(path, TreeStrategy::bfs)) == 0);
}

TEST_CASE("optimised constants never exceed any single tree") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const PlanarGraph g = check::random_multigraph(rng, 6, 4);
    const BoundConstants best = optimize_constants(g);
    for (VertexId r = 0; r < g.vertex_count(); ++r) {
      const BoundConstants c = tree_bound_constants(g, spanning_tree(g, TreeStrategy::bfs, r));
      CHECK(best.a <= c.a);
      if (best.a == c.a) CHECK(best.a * best.b <= c.a * c.b);
    }
  }
}

TEST_CASE("bound evaluation") {
  const BoundConstants c = tree_bound_constants(check::theta_graph(), SpanningTree{{0}, 0});
  CHECK(c.evaluate_doubled(5) == c.a * 5 + c.a * c.b);
  CHECK(c.evaluate(5) == doctest::Approx(static_cast<double>(c.evaluate_doubled(5)) / 2));
  CHECK(trivializable_bound(0) == 0);
  CHECK(trivializable_bound(7) == 3);
  CHECK(trivializable_bound(8) == 4);
  CHECK_THROWS_AS(tree_bound_constants(check::triangle_graph(), SpanningTree{{0, 1, 2}, 0}), std::invalid_argument);
}

TEST_CASE("descending change sets on braids and knots") {
  for (int c = 1; c <= 9; ++c) {
    const LinkDiagram d = closed_two_braid(c);
    const DescendingChange change = descending_change_set(d);
    CHECK(change.crossing_count == c);
    CHECK(static_cast<int>(change.changed.size()) <= c / 2);
    const Layering after = layering(apply_changes(d, change.changed));
    CHECK(after == (change.complement ? Layering::ascending : Layering::descending));
  }
  const LinkDiagram fig8 = knot_from_pd({{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}});
  const DescendingChange change = descending_change_set(fig8);
  CHECK(static_cast<int>(change.changed.size()) <= 2);
}

TEST_CASE("descending change sets on graph diagrams") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    const PlanarGraph g = trial % 2 ? check::triangle_graph() : check::theta_graph();
    const SpanningTree t = spanning_tree(g, TreeStrategy::bfs);
    const auto allowed = off_tree(g, t);
    Diagram d = crossing_free_diagram(g);
    const int edits = 1 + trial % 5;
    for (int s = 0; s < edits; ++s) d = check::random_edit(d, rng, &allowed);
    REQUIRE(validate_diagram(d).empty());
    const EdgeOrder order = default_edge_order(g, t);
    const DescendingChange change = descending_change_set(d, t, order);
    CAPTURE(trial);
    CHECK(change.crossing_count == d.crossing_count());
    CHECK(static_cast<int>(change.changed.size()) <= trivializable_bound(d.crossing_count()));
    const Layering after = layering(apply_changes(d, change.changed), order);
    CHECK(after == (change.complement ? Layering::ascending : Layering::descending));
  }
}

TEST_CASE("crossings on tree edges are rejected") {
  const PlanarGraph g = check::triangle_graph();
  const SpanningTree t = spanning_tree(g, TreeStrategy::bfs);
  Diagram d = insert_kink(crossing_free_diagram(g), t.edges[0], true, true);
  CHECK_THROWS_AS(descending_change_set(d, t, default_edge_order(g, t)), std::invalid_argument);
}
