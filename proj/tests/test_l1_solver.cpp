#include <doctest.h>

#include <cstdlib>
#include <random>

#include "check/oracles.hpp"
#include "plum/l1_solver.hpp"
#include "plum/move_space.hpp"

using namespace plum;

namespace {

std::vector<int> combine(const std::vector<std::vector<int>>& gens, const std::vector<int>& phi, std::size_t dim) {
  std::vector<int> sum(dim, 0);
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t i = 0; i < dim; ++i) sum[i] += phi[g] * gens[g][i];
  return sum;
}

int l1(const std::vector<int>& phi) {
  int s = 0;
  for (int x : phi) s += std::abs(x);
  return s;
}

std::vector<int> standard_target(int n) {
  std::vector<int> t(std::size_t(n), 0);
  t[0] = 2 * n + 1;
  return t;
}

}  // namespace

TEST_CASE("minimum matches the brute-force oracle") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> coordinate(-4, 4);
  const int cap = 6;
  for (int trial = 0; trial < 120; ++trial) {
    const int dim = 1 + trial % 3;
    const int count = 1 + trial % 4;
    std::vector<std::vector<int>> gens(static_cast<std::size_t>(count), std::vector<int>(static_cast<std::size_t>(dim)));
    for (auto& g : gens)
      for (int& x : g) x = entry(rng);
    std::vector<int> target(static_cast<std::size_t>(dim));
    for (int& x : target) x = coordinate(rng);
    CAPTURE(trial);
    const auto expected = check::brute_force_min_l1(gens, target, cap);
    const L1Result r = min_l1({dim, gens, target}, {cap, 1'000'000});
    if (expected) {
      REQUIRE(r.status == L1Status::solved);
      CHECK(r.cost == *expected);
      CHECK(l1(r.phi) == r.cost);
      CHECK(combine(gens, r.phi, std::size_t(dim)) == target);
      CHECK(r.achieved == target);
    } else {
      CHECK(r.status == L1Status::unresolved);
      CHECK(r.lower_bound > cap);
    }
  }
}

TEST_CASE("zero target costs nothing") {
  const L1Result r = min_l1({2, {{1, 0}, {0, 1}}, {0, 0}});
  REQUIRE(r.status == L1Status::solved);
  CHECK(r.cost == 0);
  CHECK(r.phi == std::vector<int>{0, 0});
}

TEST_CASE("budgets end the search as unresolved, never as a wrong answer") {
  const L1Result by_cost = min_l1({1, {{2}}, {7}}, {20, 1'000'000});
  CHECK(by_cost.status == L1Status::unresolved);
  CHECK_FALSE(by_cost.reason.empty());
  const L1Result by_states = min_l1({2, {{1, 0}, {0, 1}}, {30, 30}}, {64, 50});
  CHECK(by_states.status == L1Status::unresolved);
  CHECK(by_states.lower_bound <= 60);
}

TEST_CASE("pinned coordinates leave the rest free") {
  const L1Result r = min_l1({2, {{1, 5}, {2, 0}}, {1, 0}, 1});
  REQUIRE(r.status == L1Status::solved);
  CHECK(r.cost == 1);
  CHECK(r.achieved[0] == 1);
}

TEST_CASE("lower bound 2n over the move set") {
  for (int n = 1; n <= 3; ++n) {
    const auto gens = move_set(n).raw;
    const L1Result r = min_l1({n, gens, standard_target(n)});
    REQUIRE(r.status == L1Status::solved);
    CHECK(r.cost == 2 * n);
    CHECK(combine(gens, r.phi, std::size_t(n)) == standard_target(n));
  }
}

TEST_CASE("explicit unknotting sequence") {
  for (int n = 1; n <= 12; ++n) {
    const auto seq = unknotting_sequence(n);
    CHECK(seq.size() == std::size_t(2 * n));
    std::vector<int> sum(std::size_t(n), 0);
    for (const auto& term : seq)
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += term[i];
    CHECK(sum == standard_target(n));
    const UnknottingReport report = verify_unknotting_number(n, 0);
    CHECK(report.upper_ok);
    CHECK(report.upper_terms_realized);
    CHECK_FALSE(report.lower.has_value());
  }
  const UnknottingReport one = verify_unknotting_number(1);
  CHECK(one.lower == 2);
}

TEST_CASE("prefix-constrained minima") {
  for (int n = 2; n <= 3; ++n) {
    const auto gens = move_set(n).raw;
    for (int k = 1; k <= n; ++k) {
      const PrefixResult r = prefix_min_l1(gens, n, k);
      REQUIRE(r.search.status == L1Status::solved);
      CHECK(r.search.cost == n + k);
      CHECK(r.next_values.has_value() == (k + 2 <= n));
    }
  }
}
