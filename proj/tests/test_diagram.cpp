#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "check/oracles.hpp"
#include "plum/diagram.hpp"
#include "plum/invariants.hpp"
#include "plum/plum_graph.hpp"

using namespace plum;

namespace {

int euler(const PlanarMap& map) {
  return static_cast<int>(map.nodes.size()) - static_cast<int>(map.arcs.size()) +
         static_cast<int>(map.faces().size());
}

}  // namespace

TEST_CASE("standard diagrams are valid closed 2-braids on the equator") {
  for (int n = 1; n <= 5; ++n) {
    const Diagram d = standard_plum_diagram(n);
    CAPTURE(n);
    CHECK(validate_diagram(d).empty());
    CHECK(d.crossing_count() == 2 * n + 1);
    CHECK(euler(d.map) == 2);
    const PlumGraph p = build_plum_graph(n);
    for (auto x : d.crossing_ids()) {
      const auto [over, under] = crossing_edges(d, x);
      CHECK(p.role(over) == EdgeRole::equatorial);
      CHECK(p.role(under) == EdgeRole::equatorial);
      CHECK_FALSE(p.graph.adjacent_edges(over, under));
    }
  }
}

TEST_CASE("crossing-free diagrams") {
  for (int n = 1; n <= 4; ++n) {
    const Diagram d = trivial_plum_diagram(n);
    CHECK(validate_diagram(d).empty());
    CHECK(d.crossing_count() == 0);
  }
  const Diagram theta = crossing_free_diagram(check::theta_graph());
  CHECK(validate_diagram(theta).empty());
  CHECK(theta.map.arcs.size() == 3);
}

TEST_CASE("edge arc chains rebuild every edge") {
  const Diagram d = standard_plum_diagram(2);
  const auto chains = edge_arc_chains(d.graph, d.map);
  REQUIRE(chains.size() == std::size_t(d.graph.edge_count()));
  std::size_t arcs = 0;
  for (EdgeId e = 0; e < d.graph.edge_count(); ++e) {
    const auto& chain = chains[std::size_t(e)];
    arcs += chain.size();
    for (int a : chain) CHECK(d.map.arcs[std::size_t(a)].edge == e);
  }
  CHECK(arcs == d.map.arcs.size());
}

TEST_CASE("crossing change and mirror are involutions") {
  const Diagram d = standard_plum_diagram(2);
  for (auto x : d.crossing_ids()) {
    const Diagram changed = crossing_change(d, x);
    CHECK(validate_diagram(changed).empty());
    CHECK(crossing_sign(changed, x) == -crossing_sign(d, x));
    CHECK(crossing_change(changed, x) == d);
  }
  CHECK(mirror(mirror(d)) == d);
  CHECK(projection_of(mirror(d)) == projection_of(d));
  CHECK_THROWS_AS(crossing_change(d, CrossingId{99}), std::invalid_argument);
}

TEST_CASE("standard crossings are positive after normalisation") {
  for (int n = 1; n <= 4; ++n) {
    const Diagram d = standard_plum_diagram(n);
    int total = 0;
    for (auto x : d.crossing_ids()) total += crossing_sign(d, x);
    CHECK(std::abs(total) == d.crossing_count());
  }
}

TEST_CASE("resolutions of the cube projection") {
  const Projection p = cube_knotted_projection();
  CHECK(validate_projection(p).empty());
  CHECK(p.crossing_count() == 3);
  CHECK(p == projection_of(standard_plum_diagram(1)));
  const auto all = resolutions(p);
  CHECK(all.size() == 8);
  for (const auto& d : all) {
    CHECK(validate_diagram(d).empty());
    CHECK(projection_of(d) == p);
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
  CHECK_THROWS_AS(resolutions(p, 2), std::length_error);
}

TEST_CASE("Reidemeister edits keep diagrams valid") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 3;
    Diagram d = trial % 2 ? standard_plum_diagram(n) : trivial_plum_diagram(n);
    for (int s = 0; s < 5; ++s) {
      const int before = d.crossing_count();
      d = check::random_edit(d, rng);
      CAPTURE(trial);
      CAPTURE(s);
      REQUIRE(validate_diagram(d).empty());
      const int added = d.crossing_count() - before;
      CHECK((added == 1 || added == 2));
      CHECK(euler(d.map) == 2);
    }
  }
}

TEST_CASE("a kink adds one crossing between adjacent pieces of one edge") {
  const Diagram d = trivial_plum_diagram(1);
  for (bool left : {true, false})
    for (bool over : {true, false}) {
      const Diagram k = insert_kink(d, 0, left, over);
      REQUIRE(validate_diagram(k).empty());
      REQUIRE(k.crossing_count() == 1);
      const auto [a, b] = crossing_edges(k, k.crossing_ids()[0]);
      CHECK(a == b);
    }
  CHECK_THROWS_AS(insert_kink(d, 999, true, true), std::invalid_argument);
}

TEST_CASE("a finger needs two arcs on a common face") {
  const Diagram d = trivial_plum_diagram(1);
  const auto faces = d.map.faces();
  const auto& face = faces[0];
  REQUIRE(face.size() >= 2);
  const Diagram f = insert_finger(d, face[0], face[1], true);
  CHECK(validate_diagram(f).empty());
  CHECK(f.crossing_count() == 2);
  CHECK_THROWS_AS(insert_finger(d, face[0], face[0], true), std::invalid_argument);
  // Every dart bounds exactly one face, so a dart of another face on a
  // different arc never shares a face with face[0].
  ArcEnd elsewhere{-1, 0};
  for (std::size_t i = 1; i < faces.size() && elsewhere.arc < 0; ++i)
    for (const auto& dart : faces[i])
      if (dart.arc != face[0].arc) elsewhere = dart;
  REQUIRE(elsewhere.arc >= 0);
  CHECK_THROWS_AS(insert_finger(d, face[0], elsewhere, true), std::invalid_argument);
}

TEST_CASE("restriction to cycles") {
  for (int n = 1; n <= 3; ++n) {
    const PlumGraph p = build_plum_graph(n);
    const Diagram d = standard_plum_diagram(n);
    const LinkDiagram knot = restrict_to_cycles(d, std::span<const Cycle>(&p.equator, 1));
    CHECK(validate_link_diagram(knot).empty());
    CHECK(knot.components == 1);
    CHECK(knot.crossing_count() == 2 * n + 1);
    int disjoint = 0;
    for (int i = 1; i <= p.order(); ++i)
      for (int j = 1; j <= p.order(); ++j) {
        const std::array<Cycle, 2> pair{p.north_cycle(i), p.south_cycle(j)};
        if (!vertex_disjoint(p.graph, pair[0], pair[1])) continue;
        ++disjoint;
        const LinkDiagram link = restrict_to_cycles(d, pair);
        CHECK(validate_link_diagram(link).empty());
        CHECK(link.components == 2);
        CHECK(linking_number(link) == region_linking(d, p, i, j));
      }
    CHECK(disjoint > 0);
  }
  const PlumGraph p = build_plum_graph(1);
  const std::array<Cycle, 2> same{p.equator, p.equator};
  CHECK_THROWS_AS(restrict_to_cycles(standard_plum_diagram(1), same), std::invalid_argument);
}

TEST_CASE("validation catches structural damage") {
  Diagram d = standard_plum_diagram(1);
  Diagram adjacent = d;
  const auto& rot = adjacent.map.nodes[std::size_t(adjacent.crossings[0].node)].rotation;
  adjacent.crossings[0].over = {rot[0], rot[1]};
  adjacent.crossings[0].under = {rot[2], rot[3]};
  CHECK_FALSE(validate_diagram(adjacent).empty());
  Diagram wrong_degree = d;
  wrong_degree.map.nodes[0].rotation.pop_back();
  CHECK_FALSE(validate_diagram(wrong_degree).empty());
  Diagram twisted = d;
  std::swap(twisted.map.nodes[2].rotation[0], twisted.map.nodes[2].rotation[1]);
  CHECK_FALSE(validate_diagram(twisted).empty());
}
