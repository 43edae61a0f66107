#pragma once

#include <map>
#include <string>
#include <vector>

#include "plum/diagram.hpp"
#include "plum/plum_graph.hpp"

namespace plum {

enum class PairClass { equatorial_equatorial, equatorial_spoke, north_south_spoke };

std::string to_string(PairClass c);

struct EdgePair {
  EdgeId first = 0;
  EdgeId second = 0;
  PairClass kind = PairClass::equatorial_equatorial;
  friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

/// All unordered pairs (first < second) of edges without a common vertex.
std::vector<EdgePair> disjoint_edge_pairs(const PlumGraph& p);

/// Classifies two vertex-disjoint edges. Throws std::invalid_argument when
/// they share a vertex.
EdgePair classify_pair(const PlumGraph& p, EdgeId d, EdgeId e);

struct MoveVector {
  std::vector<int> value;
  EdgePair pair;
  int epsilon = 1;
};

/// Change of the linking vector caused by one crossing change between the
/// two edges: epsilon times the sum, over disjoint region-cycle pairs
/// (N_i, S_j) holding one edge each, of the product of the cycles'
/// traversal signs on their edges, bucketed by suffix offset. A crossing of
/// sign s (edges oriented by their reference orientation) changes the
/// linking vector by the delta with epsilon = -s.
MoveVector crossing_change_delta(const PlumGraph& p, EdgeId d, EdgeId e, int epsilon);

/// Representative up to sign: first nonzero entry positive.
std::vector<int> sign_normalized(std::vector<int> v);

struct LabeledVector {
  std::string label;
  std::vector<int> value;
};

/// a_1..a_n, b_1..b_{n-1}, c_1..c_{n-1}, d, e_1..e_{n-2}, p, q, truncated to
/// n coordinates. For n = 1 only a_1 = (2) and q = (1) remain distinct.
std::vector<LabeledVector> closed_form_generators(int n);

struct MoveSet {
  int n = 0;
  std::vector<LabeledVector> labeled;
  /// Distinct nonzero deltas over all disjoint pairs and both signs, one
  /// representative per sign class, sorted.
  std::vector<std::vector<int>> raw;
  /// Edge pairs realizing each representative.
  std::map<std::vector<int>, std::vector<EdgePair>> realizations;
  bool matches_closed_form = false;

  /// Labeled vectors, deduplicated, as L1 generators.
  std::vector<std::vector<int>> generators() const;
};

MoveSet move_set(int n);

struct DeltaCheck {
  CrossingId crossing;
  EdgePair pair;  // kind is meaningless when the edges share a vertex
  bool disjoint = false;
  std::vector<int> observed;
  std::vector<int> predicted;
  bool ok = false;
};

/// Changes every crossing of `d` in turn and compares the change of the
/// linking vector with the predicted delta (zero for edges sharing a
/// vertex).
std::vector<DeltaCheck> check_crossing_deltas(const Diagram& d, const PlumGraph& p);

/// check_crossing_deltas on the standard diagram.
std::vector<DeltaCheck> verify_delta_realization(int n);

}  // namespace plum
