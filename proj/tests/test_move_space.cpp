#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "check/oracles.hpp"
#include "plum/diagram.hpp"
#include "plum/invariants.hpp"
#include "plum/move_space.hpp"
#include "plum/plum_graph.hpp"

using namespace plum;

namespace {

std::vector<int> negated(std::vector<int> v) {
  for (int& x : v) x = -x;
  return v;
}

}  // namespace

TEST_CASE("disjoint edge pairs are exactly the non-adjacent pairs") {
  for (int n = 1; n <= 4; ++n) {
    const PlumGraph p = build_plum_graph(n);
    const auto pairs = disjoint_edge_pairs(p);
    std::size_t expected = 0;
    for (EdgeId d = 0; d < p.graph.edge_count(); ++d)
      for (EdgeId e = d + 1; e < p.graph.edge_count(); ++e) expected += !p.graph.adjacent_edges(d, e);
    CHECK(pairs.size() == expected);
    for (const auto& pair : pairs) {
      CHECK(pair.first < pair.second);
      CHECK(classify_pair(p, pair.first, pair.second) == pair);
    }
  }
}

TEST_CASE("pair classes") {
  const PlumGraph p = build_plum_graph(2);
  CHECK(classify_pair(p, p.equator_edge(0), p.equator_edge(3)).kind == PairClass::equatorial_equatorial);
  CHECK(classify_pair(p, p.north_spoke(1), p.south_spoke(1)).kind == PairClass::north_south_spoke);
  CHECK(classify_pair(p, p.equator_edge(4), p.north_spoke(1)).kind == PairClass::equatorial_spoke);
  CHECK_THROWS_AS(classify_pair(p, p.equator_edge(0), p.equator_edge(1)), std::invalid_argument);
  CHECK_THROWS_AS(classify_pair(p, p.north_spoke(1), p.north_spoke(2)), std::invalid_argument);
  CHECK(to_string(PairClass::equatorial_spoke) != to_string(PairClass::equatorial_equatorial));
}

TEST_CASE("delta is odd in epsilon") {
  const PlumGraph p = build_plum_graph(3);
  for (const auto& pair : disjoint_edge_pairs(p)) {
    const auto plus = crossing_change_delta(p, pair.first, pair.second, 1).value;
    const auto minus = crossing_change_delta(p, pair.first, pair.second, -1).value;
    CHECK(minus == negated(plus));
    CHECK(crossing_change_delta(p, pair.second, pair.first, 1).value == plus);
  }
}

TEST_CASE("sign normalisation") {
  CHECK(sign_normalized({0, -2, 1}) == std::vector<int>{0, 2, -1});
  CHECK(sign_normalized({3, -1}) == std::vector<int>{3, -1});
  CHECK(sign_normalized({0, 0}) == std::vector<int>{0, 0});
}

TEST_CASE("enumerated move sets match the closed form") {
  for (int n = 1; n <= 5; ++n) {
    const MoveSet ms = move_set(n);
    CAPTURE(n);
    CHECK(ms.matches_closed_form);
    std::set<std::vector<int>> closed;
    for (const auto& lv : closed_form_generators(n)) closed.insert(sign_normalized(lv.value));
    closed.erase(std::vector<int>(std::size_t(n), 0));
    const std::set<std::vector<int>> raw(ms.raw.begin(), ms.raw.end());
    CHECK(raw == closed);
    for (const auto& v : ms.raw) {
      CHECK(v == sign_normalized(v));
      CHECK_FALSE(ms.realizations.at(v).empty());
    }
  }
}

TEST_CASE("closed form for n = 1") {
  const auto gens = closed_form_generators(1);
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].value == std::vector<int>{2});
  CHECK(gens[1].value == std::vector<int>{1});
}

TEST_CASE("every crossing of the standard diagram realises its predicted delta") {
  for (int n = 1; n <= 4; ++n) {
    const auto checks = verify_delta_realization(n);
    CHECK(checks.size() == std::size_t(2 * n + 1));
    for (const auto& c : checks) {
      CHECK(c.ok);
      CHECK(c.disjoint);
      CHECK(c.observed == c.predicted);
    }
  }
}

TEST_CASE("deltas stay exact on randomly edited diagrams") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 3;
    const PlumGraph p = build_plum_graph(n);
    Diagram d = standard_plum_diagram(n);
    for (int s = 0; s < 3; ++s) d = check::random_edit(d, rng);
    for (const auto& c : check_crossing_deltas(d, p)) {
      CAPTURE(trial);
      CHECK(c.ok);
      if (!c.disjoint) CHECK(c.observed == std::vector<int>(std::size_t(n), 0));
    }
  }
}
