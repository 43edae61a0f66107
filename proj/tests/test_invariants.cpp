#include <doctest.h>

#include <random>
#include <stdexcept>

#include "check/oracles.hpp"
#include "plum/diagram.hpp"
#include "plum/invariants.hpp"
#include "plum/plum_graph.hpp"

using namespace plum;

namespace {

struct KnotFixture {
  const char* name;
  std::vector<std::array<int, 4>> code;
  long determinant;
};

const std::vector<KnotFixture>& fixtures() {
  static const std::vector<KnotFixture> table = {
      {"3_1", {{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}}, 3},
      {"4_1", {{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}, 5},
      {"5_1", {{1, 6, 2, 7}, {3, 8, 4, 9}, {5, 10, 6, 1}, {7, 2, 8, 3}, {9, 4, 10, 5}}, 5},
      {"5_2", {{1, 5, 2, 4}, {3, 9, 4, 8}, {5, 1, 6, 10}, {7, 3, 8, 2}, {9, 7, 10, 6}}, 7},
      {"6_1", {{1, 7, 2, 6}, {3, 10, 4, 11}, {5, 3, 6, 2}, {7, 1, 8, 12}, {9, 4, 10, 5}, {11, 9, 12, 8}}, 9},
  };
  return table;
}

Cycle equator_of(const Diagram& d) { return build_plum_graph(*detect_plum_order(d.graph)).equator; }

}  // namespace

TEST_CASE("knot table determinants") {
  for (const auto& k : fixtures()) {
    CAPTURE(k.name);
    const LinkDiagram d = knot_from_pd(k.code);
    REQUIRE(validate_link_diagram(d).empty());
    CHECK(knot_determinant(d) == k.determinant);
    CHECK(knot_determinant(mirror(d)) == k.determinant);
    CHECK(check::bracket_determinant(d) == k.determinant);
  }
}

TEST_CASE("torus knot determinants agree with the state sum") {
  for (int c = 1; c <= 11; c += 2) {
    const LinkDiagram d = closed_two_braid(c);
    CHECK(knot_determinant(d) == c);
    CHECK(check::bracket_determinant(d) == c);
  }
  CHECK(knot_determinant(LinkDiagram{1, {}, {}}) == 1);
}

TEST_CASE("linking vector of the standard and trivial diagrams") {
  for (int n = 1; n <= 4; ++n) {
    const PlumGraph p = build_plum_graph(n);
    const LinkingVector standard = linking_vector(standard_plum_diagram(n), p);
    std::vector<int> expected(std::size_t(n), 0);
    expected[0] = 2 * n + 1;
    CHECK(standard.n == n);
    CHECK(standard.entries == expected);
    const LinkingVector trivial = linking_vector(trivial_plum_diagram(n), p);
    CHECK(trivial.entries == std::vector<int>(std::size_t(n), 0));
  }
}

TEST_CASE("linking vector entries are sums of region linking numbers") {
  for (int n = 1; n <= 3; ++n) {
    const PlumGraph p = build_plum_graph(n);
    const Diagram d = standard_plum_diagram(n);
    const int m = p.order();
    std::vector<int> sums(std::size_t(n), 0);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        const int r = ((j - i) % m + m) % m;
        const int offset = std::min(r, m - r);
        if (offset < n) sums[std::size_t(offset)] += region_linking(d, p, i, j);
      }
    CHECK(linking_vector(d, p).entries == sums);
  }
}

TEST_CASE("linking vector rejects a diagram over another graph") {
  CHECK_THROWS_AS(linking_vector(standard_plum_diagram(2), build_plum_graph(1)), std::invalid_argument);
}

TEST_CASE("invariants survive Reidemeister edits") {
  std::mt19937 rng(314);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 3;
    const PlumGraph p = build_plum_graph(n);
    Diagram d = standard_plum_diagram(n);
    const LinkingVector before = linking_vector(d, p);
    const int steps = 1 + trial % 4;
    for (int s = 0; s < steps; ++s) d = check::random_edit(d, rng);
    CAPTURE(trial);
    REQUIRE(validate_diagram(d).empty());
    CHECK(linking_vector(d, p) == before);
    const Cycle equator = equator_of(d);
    const LinkDiagram knot = restrict_to_cycles(d, std::span<const Cycle>(&equator, 1));
    REQUIRE(validate_link_diagram(knot).empty());
    CHECK(knot_determinant(knot) == 2 * n + 1);
    if (knot.crossing_count() <= 16) CHECK(check::bracket_determinant(knot) == 2 * n + 1);
  }
}

TEST_CASE("nontriviality certificates") {
  const Certificate standard = nontriviality_certificate(standard_plum_diagram(1), build_plum_graph(1).graph);
  CHECK(standard.verdict == Verdict::nontrivial);
  CHECK_FALSE(standard.witnesses.empty());
  for (const auto& w : standard.witnesses) {
    CHECK((w.invariant == "lk" || w.invariant == "det"));
    CHECK(w.cycles.size() == (w.invariant == "lk" ? 2u : 1u));
    if (w.invariant == "det") CHECK(w.value != 1);
    else CHECK(w.value != 0);
  }
  const Certificate trivial = nontriviality_certificate(trivial_plum_diagram(1), build_plum_graph(1).graph);
  CHECK(trivial.verdict == Verdict::inconclusive);
  CHECK(trivial.witnesses.empty());
  CHECK(trivial.hopf_count == 0);
}
