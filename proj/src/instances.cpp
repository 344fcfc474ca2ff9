#include "arrlab/instances.hpp"

#include "arrlab/errors.hpp"

namespace arrlab {

Subspace w_n(std::size_t n) {
  if (n < 2) fail(ErrorCode::BadParam, "W_n needs n >= 2");
  RationalMatrix form(1, n);
  for (std::size_t j = 0; j < n; ++j) form.at(0, j) = 1;
  return Subspace::from_forms(n, form);
}

RationalMatrix cyclic_shift_matrix(std::size_t n) {
  if (n < 1) fail(ErrorCode::BadParam, "shift needs n >= 1");
  RationalMatrix m(n, n);
  m.at(0, n - 1) = 1;
  for (std::size_t i = 1; i < n; ++i) m.at(i, i - 1) = 1;
  return m;
}

RationalMatrix reversal_matrix(std::size_t n) {
  if (n < 1) fail(ErrorCode::BadParam, "reversal needs n >= 1");
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1 - i) = 1;
  return m;
}

std::vector<RationalMatrix> dihedral_generators(std::size_t n, std::size_t copies) {
  if (n < 2) fail(ErrorCode::BadParam, "dihedral generators need n >= 2");
  if (copies < 1) fail(ErrorCode::BadParam, "need at least one copy");
  return {block_diagonal(cyclic_shift_matrix(n), copies),
          block_diagonal(reversal_matrix(n), copies)};
}

PaperInstance example_12() {
  Arrangement a = Arrangement::in_full_space(2, {Subspace::zero(2)}, {"origin"});
  return PaperInstance{"example_12", std::move(a), FiniteMatrixGroup::trivial(2),
                       "origin of the plane; blow-up lands in R^4 with forms x1, x4"};
}

namespace {

// Ambient (W_n)^{+copies} inside R^{n*copies}: one all-ones form per copy.
Subspace w_n_sum(std::size_t n, std::size_t copies) {
  RationalMatrix forms(0, n * copies);
  for (std::size_t c = 0; c < copies; ++c) {
    RationalMatrix row(1, n * copies);
    for (std::size_t j = 0; j < n; ++j) row.at(0, c * n + j) = 1;
    forms.append_row(row);
  }
  return Subspace::from_forms(n * copies, forms);
}

}  // namespace

PaperInstance example_3_1(std::size_t n) {
  if (n < 3 || n % 2 == 0) fail(ErrorCode::BadParam, "needs odd n >= 3");
  const std::size_t copies = 3;
  const Subspace ambient = w_n_sum(n, copies);
  RationalMatrix forms = ambient.forms();
  for (std::size_t c = 0; c < copies; ++c) {
    RationalMatrix row(1, n * copies);
    row.at(0, c * n) = 1;  // first coordinate of each copy vanishes
    forms.append_row(row);
  }
  const Subspace seed = Subspace::from_forms(n * copies, forms);
  FiniteMatrixGroup group =
      FiniteMatrixGroup::generate({block_diagonal(cyclic_shift_matrix(n), copies)});
  Arrangement arrangement =
      g_closure(group, Arrangement(ambient, {seed}, {"L"}));
  return PaperInstance{"example_3_1", std::move(arrangement), std::move(group),
                       "cyclic orbit of the first-coordinate subspace in three summands"};
}

PaperInstance example_3_2() {
  const std::size_t n = 5;
  const Subspace ambient = w_n_sum(n, 1);
  RationalMatrix forms = ambient.forms();
  for (std::size_t j = 0; j < 3; ++j) {
    RationalMatrix row(1, n);
    row.at(0, j) = 1;
    forms.append_row(row);
  }
  RationalMatrix last(1, n);
  last.at(0, 3) = 1;
  last.at(0, 4) = 1;
  forms.append_row(last);
  const Subspace seed = Subspace::from_forms(n, forms);
  FiniteMatrixGroup group = FiniteMatrixGroup::generate({cyclic_shift_matrix(n)});
  Arrangement arrangement = g_closure(group, Arrangement(ambient, {seed}, {"L"}));
  return PaperInstance{"example_3_2", std::move(arrangement), std::move(group),
                       "Z/5 orbit of {x1 = x2 = x3 = x4 + x5 = 0} in W_5"};
}

namespace {

// One block-vs-antipodal-block equality row on the given copy: the sum of
// a_t coordinates starting at beta_t equals the matching sum shifted by n/2.
RationalMatrix block_equality_row(const Ration& ration, std::size_t t, std::size_t copy,
                                  std::size_t n, std::size_t total_dim) {
  RationalMatrix row(1, total_dim);
  const std::size_t beta = ration.block_start(t);
  for (std::size_t s = 0; s < static_cast<std::size_t>(ration.parts[t - 1]); ++s) {
    row.at(0, copy * n + (beta - 1) + s) = 1;
    row.at(0, copy * n + n / 2 + (beta - 1) + s) = -1;
  }
  return row;
}

}  // namespace

Subspace seed_l_b(const Ration& ration, std::size_t j) {
  if (j < 2) fail(ErrorCode::BadParam, "the fan test space needs j >= 2");
  const std::size_t n = ration.n;
  const std::size_t copies = j - 1;
  const Subspace ambient = w_n_sum(n, copies);
  RationalMatrix forms = ambient.forms();
  for (std::size_t copy = 0; copy < copies; ++copy) {
    for (std::size_t t = 1; t <= ration.k; ++t) {
      forms.append_row(block_equality_row(ration, t, copy, n, n * copies));
    }
  }
  return Subspace::from_forms(n * copies, forms);
}

PaperInstance test_arrangement_b(const Ration& ration, std::size_t j) {
  const Subspace seed = seed_l_b(ration, j);
  const std::size_t copies = j - 1;
  const Subspace ambient = w_n_sum(ration.n, copies);
  FiniteMatrixGroup group =
      FiniteMatrixGroup::generate(dihedral_generators(ration.n, copies));
  Arrangement arrangement = g_closure(group, Arrangement(ambient, {seed}, {"L_B"}));
  return PaperInstance{"test_arrangement_B", std::move(arrangement), std::move(group),
                       "dihedral closure of the block-equality subspace, ration " +
                           ration.to_string()};
}

Subspace seed_l_a(const Ration& ration, std::size_t j) {
  if (j < 1) fail(ErrorCode::BadParam, "the straight-cut test space needs j >= 1");
  const std::size_t n = ration.n;
  const std::size_t total_dim = n * j;
  const Subspace ambient = w_n_sum(n, j);
  RationalMatrix forms = ambient.forms();
  // k angle equalities on the first copy: n/2 consecutive coordinates
  // starting at each block boundary sum to zero.
  for (std::size_t l = 1; l <= ration.k; ++l) {
    RationalMatrix row(1, total_dim);
    const std::size_t beta = ration.block_start(l);
    for (std::size_t s = 0; s < n / 2; ++s) row.at(0, (beta - 1) + s) = 1;
    forms.append_row(row);
  }
  for (std::size_t copy = 1; copy < j; ++copy) {
    for (std::size_t t = 1; t <= ration.k; ++t) {
      forms.append_row(block_equality_row(ration, t, copy, n, total_dim));
    }
  }
  return Subspace::from_forms(total_dim, forms);
}

PaperInstance test_arrangement_a(const Ration& ration, std::size_t j) {
  const Subspace seed = seed_l_a(ration, j);
  const Subspace ambient = w_n_sum(ration.n, j);
  FiniteMatrixGroup group = FiniteMatrixGroup::generate(dihedral_generators(ration.n, j));
  Arrangement arrangement = g_closure(group, Arrangement(ambient, {seed}, {"L_A"}));
  return PaperInstance{"test_arrangement_A", std::move(arrangement), std::move(group),
                       "dihedral closure of the angle/block equality subspace, ration " +
                           ration.to_string()};
}

}  // namespace arrlab
