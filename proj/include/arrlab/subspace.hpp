#pragma once

#include <cstddef>

#include "arrlab/matrix.hpp"

namespace arrlab {

// A linear subspace of R^m stored by its defining forms: the rows of a
// full-row-rank matrix F with S = {x | F x = 0}. F is kept in reduced
// row-echelon form with zero rows removed, so equality of subspaces is
// structural equality of the stored matrices.
class Subspace {
 public:
  // Canonicalizes the given forms (any spanning set of the row space works).
  static Subspace from_forms(std::size_t ambient_dim, const RationalMatrix& raw_forms);
  // Subspace spanned by the given row vectors.
  static Subspace from_span(std::size_t ambient_dim, const RationalMatrix& row_vectors);
  static Subspace full(std::size_t ambient_dim);  // no forms
  static Subspace zero(std::size_t ambient_dim);  // forms = identity

  std::size_t ambient_dim() const { return ambient_dim_; }
  const RationalMatrix& forms() const { return forms_; }
  std::size_t dim() const { return ambient_dim_ - forms_.rows(); }
  // Codimension inside the full R^m.
  std::size_t codim() const { return forms_.rows(); }

  // Basis of the subspace itself, as rows (kernel of the forms matrix).
  RationalMatrix span_rows() const;

  bool is_full() const { return forms_.rows() == 0; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.forms_ == b.forms_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim_ != b.ambient_dim_) return a.ambient_dim_ < b.ambient_dim_;
    return a.forms_ < b.forms_;
  }

 private:
  Subspace(std::size_t ambient_dim, RationalMatrix canonical_forms)
      : ambient_dim_(ambient_dim), forms_(std::move(canonical_forms)) {}

  std::size_t ambient_dim_;
  RationalMatrix forms_;
};

// Meet in the subspace lattice: stack both form sets and re-canonicalize.
Subspace intersect(const Subspace& s1, const Subspace& s2);

// Sum of subspaces (join), computed by stacking spanning bases.
Subspace subspace_sum(const Subspace& s1, const Subspace& s2);

// True iff inner is a subset of outer, i.e. the row space of outer's forms
// lies inside the row space of inner's forms.
bool contains(const Subspace& outer, const Subspace& inner);

// dim(v) - dim(s); requires s to be contained in v.
std::size_t codim_in(const Subspace& s, const Subspace& v);

// Image g.S = {g x | x in S}; forms transform by F -> rref(F g^{-1}).
Subspace act_by_matrix(const RationalMatrix& g_inverse, const Subspace& s);

// Evaluate the forms at a rational point; true iff the point lies in S.
bool subspace_contains_point(const Subspace& s, const std::vector<Rational>& x);

}  // namespace arrlab
