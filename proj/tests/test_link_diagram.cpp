#include <doctest.h>

#include <stdexcept>

#include "check/oracles.hpp"
#include "plum/invariants.hpp"
#include "plum/link_diagram.hpp"

using namespace plum;

TEST_CASE("closed two-braids") {
  for (int c = 1; c <= 9; ++c) {
    for (bool right : {true, false}) {
      const LinkDiagram d = closed_two_braid(c, right);
      CAPTURE(c);
      CHECK(validate_link_diagram(d).empty());
      CHECK(d.crossing_count() == c);
      CHECK(d.components == (c % 2 == 1 ? 1 : 2));
      for (int x = 0; x < c; ++x) CHECK(d.sign(x) == (right ? 1 : -1));
      if (c % 2 == 1) CHECK(writhe(d) == (right ? c : -c));
      else CHECK(linking_number(d) == (right ? c / 2 : -c / 2));
    }
  }
}

TEST_CASE("mirror negates signs and is an involution") {
  const LinkDiagram d = closed_two_braid(5);
  const LinkDiagram m = mirror(d);
  for (int x = 0; x < d.crossing_count(); ++x) CHECK(m.sign(x) == -d.sign(x));
  CHECK(mirror(m) == d);
}

TEST_CASE("faces of a reduced alternating diagram") {
  for (int c = 2; c <= 7; ++c) {
    const LinkDiagram d = closed_two_braid(c);
    CHECK(d.faces().size() == std::size_t(c + 2));
    CHECK(d.map_component_count() == 1);
  }
}

TEST_CASE("planar diagram codes") {
  const LinkDiagram trefoil = knot_from_pd({{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}});
  CHECK(validate_link_diagram(trefoil).empty());
  CHECK(trefoil.crossing_count() == 3);
  CHECK(std::abs(writhe(trefoil)) == 3);
  const LinkDiagram figure_eight = knot_from_pd({{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}});
  CHECK(validate_link_diagram(figure_eight).empty());
  CHECK(writhe(figure_eight) == 0);
  CHECK_THROWS_AS(knot_from_pd({{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 9}}), std::invalid_argument);
  CHECK_THROWS_AS(knot_from_pd({{1, 3, 2, 4}, {3, 1, 4, 2}}), std::invalid_argument);
}

TEST_CASE("validation reports broken diagrams") {
  LinkDiagram d = closed_two_braid(3);
  std::swap(d.crossings[0].rotation[0], d.crossings[0].rotation[1]);
  CHECK_FALSE(validate_link_diagram(d).empty());
  LinkDiagram e = closed_two_braid(3);
  e.arcs[0].head = (e.arcs[0].head + 1) % e.crossing_count();
  CHECK_FALSE(validate_link_diagram(e).empty());
}

TEST_CASE("linking number needs two components") {
  CHECK_THROWS_AS(linking_number(closed_two_braid(3)), std::invalid_argument);
  CHECK(linking_number(closed_two_braid(2)) == 1);
}
