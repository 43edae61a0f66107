#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "check/oracles.hpp"
#include "plum/plum_graph.hpp"

using namespace plum;

TEST_CASE("plum graph sizes, degrees and sphere embedding") {
  for (int n = 1; n <= 6; ++n) {
    const PlumGraph p = build_plum_graph(n);
    const int m = 2 * n + 1;
    CAPTURE(n);
    CHECK(p.order() == m);
    CHECK(p.graph.vertex_count() == 4 * n + 4);
    CHECK(p.graph.edge_count() == 4 * m);
    CHECK(p.graph.validate().empty());
    CHECK(p.graph.degree(p.north) == m);
    CHECK(p.graph.degree(p.south) == m);
    for (VertexId v = 2; v < p.graph.vertex_count(); ++v) CHECK(p.graph.degree(v) == 3);
    const int faces = static_cast<int>(p.graph.faces().size());
    CHECK(p.graph.vertex_count() - p.graph.edge_count() + faces == 2);
  }
}

TEST_CASE("equator visits u_1, v_{n+2}, u_2, v_{n+3}, ...") {
  for (int n = 1; n <= 5; ++n) {
    const PlumGraph p = build_plum_graph(n);
    const int m = p.order();
    CHECK(p.equator.validate(p.graph).empty());
    CHECK(p.equator.length() == std::size_t(2 * m));
    for (int i = 1; i <= m; ++i) {
      const EdgeId forward = p.equator_edge(2 * (i - 1));
      CHECK(p.graph.edge(forward).a == p.u(i));
      CHECK(p.graph.edge(forward).b == p.v(i + n + 1));
      CHECK(p.equator_edge_between(p.u(i), p.v(i + n + 1)) == forward);
      CHECK(p.equator_edge_between(p.v(i + n + 1), p.u(i + 1)) == p.equator_edge(2 * i - 1));
    }
    CHECK_THROWS_AS(p.equator_edge_between(p.u(1), p.u(2)), std::invalid_argument);
  }
}

TEST_CASE("spokes and roles") {
  const PlumGraph p = build_plum_graph(2);
  for (int i = 1; i <= p.order(); ++i) {
    const Edge& ns = p.graph.edge(p.north_spoke(i));
    const Edge& ss = p.graph.edge(p.south_spoke(i));
    CHECK(ns.a == p.north);
    CHECK(ns.b == p.u(i));
    CHECK(ss.a == p.south);
    CHECK(ss.b == p.v(i));
    CHECK(p.role(p.north_spoke(i)) == EdgeRole::north_spoke);
    CHECK(p.role(p.south_spoke(i)) == EdgeRole::south_spoke);
  }
  for (int t = 0; t < 2 * p.order(); ++t) CHECK(p.role(p.equator_edge(t)) == EdgeRole::equatorial);
  CHECK(p.wrap(0) == p.order());
  CHECK(p.wrap(p.order() + 2) == 2);
  CHECK(p.wrap(-1) == p.order() - 1);
}

TEST_CASE("region cycles are simple and pass through their pole") {
  for (int n = 1; n <= 4; ++n) {
    const PlumGraph p = build_plum_graph(n);
    for (int i = 1; i <= p.order(); ++i) {
      const Cycle& north = p.north_cycle(i);
      const Cycle& south = p.south_cycle(i);
      CHECK(north.validate(p.graph).empty());
      CHECK(south.validate(p.graph).empty());
      const auto nv = north.vertices(p.graph);
      const auto sv = south.vertices(p.graph);
      CHECK(std::count(nv.begin(), nv.end(), p.north) == 1);
      CHECK(std::count(sv.begin(), sv.end(), p.south) == 1);
      CHECK(std::count(nv.begin(), nv.end(), p.south) == 0);
      CHECK(north.contains_edge(p.north_spoke(i)));
      CHECK(south.contains_edge(p.south_spoke(i)));
    }
  }
}

TEST_CASE("labels are a bidirectional map") {
  const PlumGraph p = build_plum_graph(3);
  CHECK(p.label(p.north) == "vN");
  CHECK(p.label(p.south) == "vS");
  CHECK(p.label(p.u(4)) == "u4");
  CHECK(p.label(p.v(7)) == "v7");
  for (VertexId v = 0; v < p.graph.vertex_count(); ++v) CHECK(p.vertex(p.label(v)) == v);
  CHECK_FALSE(p.vertex("u99").has_value());
  CHECK_FALSE(p.edge_label(p.north_spoke(1)).empty());
}

TEST_CASE("plum order detection") {
  for (int n = 1; n <= 5; ++n) CHECK(detect_plum_order(build_plum_graph(n).graph) == n);
  CHECK_FALSE(detect_plum_order(check::triangle_graph()).has_value());
  CHECK_FALSE(detect_plum_order(check::theta_graph()).has_value());
  CHECK_THROWS_AS(build_plum_graph(0), std::invalid_argument);
}
