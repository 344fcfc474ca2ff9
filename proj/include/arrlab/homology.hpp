#pragma once

#include <map>

#include "arrlab/arrangement.hpp"
#include "arrlab/field.hpp"
#include "arrlab/poset.hpp"

namespace arrlab {

// Field Betti numbers, reduced or unreduced; absent degrees are zero.
struct BettiTable {
  FieldDescriptor field;
  bool reduced = false;
  std::map<int, long long> betti;

  long long at(int degree) const {
    auto it = betti.find(degree);
    return it == betti.end() ? 0 : it->second;
  }
};

// Integer boundary matrices of the reduced chain complex; index q maps C_q to
// C_{q-1}, with index 0 the augmentation row. Exposed so tests can verify
// boundary-of-boundary vanishing exactly before any field reduction.
std::vector<RationalMatrix> boundary_matrices(const SimplicialComplex& k);

// Reduced Betti numbers over the field, via boundary-matrix ranks. The empty
// complex reports {-1: 1}.
BettiTable reduced_betti(const SimplicialComplex& k, const FieldDescriptor& field);

// Unreduced Betti numbers of the arrangement complement from the
// Goresky-MacPherson decomposition: reduced degree codim(x)-2-i of each open
// lower interval contributes to degree i, and b_0 = 1 + reduced b^0.
BettiTable gm_betti(const Arrangement& a, const FieldDescriptor& field);

// Same, reusing an already computed poset.
BettiTable gm_betti(const IntersectionPoset& poset, const FieldDescriptor& field);

}  // namespace arrlab
