#pragma once

#include <string>

#include "arrlab/arrangement.hpp"
#include "arrlab/group.hpp"
#include "arrlab/ration.hpp"

namespace arrlab {

// A named arrangement together with the group acting on it; every builder is
// deterministic in its parameters.
struct PaperInstance {
  std::string name;
  Arrangement arrangement;
  FiniteMatrixGroup group;
  std::string notes;
};

// The hyperplane {x_1 + ... + x_n = 0} of R^n.
Subspace w_n(std::size_t n);

// Permutation matrices: shift (x_1,..,x_n) -> (x_n,x_1,..,x_{n-1}) and the
// full reversal. Both restrict to W_n.
RationalMatrix cyclic_shift_matrix(std::size_t n);
RationalMatrix reversal_matrix(std::size_t n);

// Shift and reversal, block-diagonally extended over `copies` direct summands.
std::vector<RationalMatrix> dihedral_generators(std::size_t n, std::size_t copies = 1);

// The origin of R^2 as a one-member arrangement (blow-up showcase).
PaperInstance example_12();

// Minimal Z/n-invariant arrangement (n odd >= 3) in W_n^{+3} containing
// {x_{1,1} = x_{1,2} = x_{1,3} = 0}, with the diagonal cyclic action.
PaperInstance example_3_1(std::size_t n);

// Z/5 orbit arrangement in W_5 of {x_1 = x_2 = x_3 = x_4 + x_5 = 0}.
PaperInstance example_3_2();

// Minimal D_2n-invariant arrangement in (W_n)^{+(j-1)} containing the block
// equality subspace L_B of the fan test map; j >= 2.
PaperInstance test_arrangement_b(const Ration& ration, std::size_t j);

// Minimal D_2n-invariant arrangement in W_n + (W_n)^{+(j-1)} containing the
// angle/block equality subspace L_A of the straight-cut test map; j >= 1.
PaperInstance test_arrangement_a(const Ration& ration, std::size_t j);

// The seed subspaces alone (handy for tests).
Subspace seed_l_b(const Ration& ration, std::size_t j);
Subspace seed_l_a(const Ration& ration, std::size_t j);

}  // namespace arrlab
