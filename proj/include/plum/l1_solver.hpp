#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace plum {

/// Find integer coefficients phi with sum phi_g * g = target on the pinned
/// coordinates, minimising sum |phi_g|. Generators are used with both signs.
struct L1Problem {
  int dim = 0;
  std::vector<std::vector<int>> generators;
  std::vector<int> target;
  /// Coordinates 1..pinned must match the target; the rest are free. -1 pins all.
  int pinned = -1;
};

struct L1Budget {
  int max_cost = 64;
  std::size_t max_states = 50'000'000;
};

enum class L1Status { solved, unresolved };

struct L1Result {
  L1Status status = L1Status::unresolved;
  std::string reason;             // why the search stopped without an answer
  int cost = 0;                   // certified minimum when solved
  int lower_bound = 0;            // no solution is cheaper than this
  std::vector<int> phi;           // one coefficient per generator
  std::vector<int> achieved;      // sum phi_g * g over all coordinates
  std::size_t states = 0;         // lattice points visited
  /// Values of every goal state in the final layer, in the projected space.
  std::vector<std::vector<int>> goal_states;
};

/// Layered breadth-first search from the origin, pruned by an admissible
/// bound on the pinned coordinates and deepened one cost at a time. At most
/// 6 coordinates with |entry| < 512 along the search.
L1Result min_l1(const L1Problem& problem, const L1Budget& budget = {});

struct PrefixResult {
  L1Result search;
  /// Values taken by coordinate k+2 over all minimum-cost solutions, when it
  /// exists.
  std::optional<std::set<int>> next_values;
};

/// Minimum cost of reaching a target whose first k coordinates are
/// (2n+1, 0, ..., 0), searched in the projection onto coordinates
/// 1..min(k+2, n).
PrefixResult prefix_min_l1(const std::vector<std::vector<int>>& generators, int n, int k,
                           const L1Budget& budget = {});

struct UnknottingReport {
  int n = 0;
  std::optional<int> lower;             // certified minimum, when searched
  std::string lower_note;
  std::vector<std::vector<int>> upper_terms;
  std::vector<int> upper_sum;
  bool upper_terms_realized = false;    // each term is an equatorial-equatorial delta
  bool upper_ok = false;                // 2n terms summing to (2n+1, 0, ..., 0)
};

/// n copies of (2,0,...,0), then b_1, -b_2, b_3, ... up to +-b_{n-1}, then
/// (-1)^(n-1) (0,...,0,1).
std::vector<std::vector<int>> unknotting_sequence(int n);

/// Lower bound by exhaustive search over the move set when n <= lower_cap,
/// and the algebraic check of the explicit unknotting sequence.
UnknottingReport verify_unknotting_number(int n, int lower_cap = 4, const L1Budget& budget = {});

}  // namespace plum
