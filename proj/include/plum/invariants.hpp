#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "plum/diagram.hpp"
#include "plum/link_diagram.hpp"
#include "plum/plum_graph.hpp"

namespace plum {

/// Half the signed count of crossings between the two components. Throws
/// std::invalid_argument unless the diagram has exactly two components.
int linking_number(const LinkDiagram& d);

/// Sum of crossing signs of a knot diagram.
int writhe(const LinkDiagram& d);

/// |Alexander polynomial at -1| from the Goeritz matrix of a checkerboard
/// colouring. 1 for a crossing-free knot.
mpz_class knot_determinant(const LinkDiagram& d);

struct LinkingVector {
  int n = 0;
  std::vector<int> entries;  // entries[k-1] holds the k-th entry
  friend bool operator==(const LinkingVector&, const LinkingVector&) = default;
};

/// Entry k sums lk(N_i, S_j) over all i, j whose suffix offset j - i is
/// +-(k-1) modulo 2n+1. Throws std::invalid_argument when the diagram is not
/// drawn over p's graph.
LinkingVector linking_vector(const Diagram& d, const PlumGraph& p);

/// lk of one north/south region-cycle pair.
int region_linking(const Diagram& d, const PlumGraph& p, int north, int south);

struct Witness {
  std::vector<Cycle> cycles;  // one cycle for "det", two for "lk"
  std::string invariant;      // "lk" or "det"
  mpz_class value;
};

enum class Verdict { nontrivial, inconclusive };

struct Certificate {
  Verdict verdict = Verdict::inconclusive;
  std::vector<Witness> witnesses;
  int hopf_count = 0;  // cycle pairs with |lk| = 1
};

/// Scans every constituent knot and every pair of disjoint cycles. Nonzero
/// linking numbers and determinants other than 1 become witnesses; a
/// diagram without witnesses is only inconclusive.
Certificate nontriviality_certificate(const Diagram& d, const PlanarGraph& g);

}  // namespace plum
