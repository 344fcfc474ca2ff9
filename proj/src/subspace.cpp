#include "arrlab/subspace.hpp"

#include "arrlab/errors.hpp"

namespace arrlab {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    fail(ErrorCode::AmbientMismatch, "subspaces live in different ambient spaces");
}

}  // namespace

Subspace Subspace::from_forms(std::size_t ambient_dim, const RationalMatrix& raw_forms) {
  if (raw_forms.rows() > 0 && raw_forms.cols() != ambient_dim)
    fail(ErrorCode::BadParam, "form length does not match ambient dimension");
  RationalMatrix canonical =
      raw_forms.rows() == 0 ? RationalMatrix(0, ambient_dim) : rref(raw_forms);
  return Subspace(ambient_dim, std::move(canonical));
}

Subspace Subspace::from_span(std::size_t ambient_dim, const RationalMatrix& row_vectors) {
  if (row_vectors.rows() > 0 && row_vectors.cols() != ambient_dim)
    fail(ErrorCode::BadParam, "vector length does not match ambient dimension");
  if (row_vectors.rows() == 0)
    return Subspace(ambient_dim, RationalMatrix::identity(ambient_dim));
  return from_forms(ambient_dim, nullspace_rows(row_vectors));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return Subspace(ambient_dim, RationalMatrix(0, ambient_dim));
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  return Subspace(ambient_dim, RationalMatrix::identity(ambient_dim));
}

RationalMatrix Subspace::span_rows() const {
  if (forms_.rows() == 0) return RationalMatrix::identity(ambient_dim_);
  return nullspace_rows(forms_);
}

Subspace intersect(const Subspace& s1, const Subspace& s2) {
  require_same_ambient(s1, s2);
  return Subspace::from_forms(s1.ambient_dim(), stack_rows(s1.forms(), s2.forms()));
}

Subspace subspace_sum(const Subspace& s1, const Subspace& s2) {
  require_same_ambient(s1, s2);
  return Subspace::from_span(s1.ambient_dim(),
                             stack_rows(s1.span_rows(), s2.span_rows()));
}

bool contains(const Subspace& outer, const Subspace& inner) {
  require_same_ambient(outer, inner);
  // outer >= inner  <=>  rowspace(outer.forms) <= rowspace(inner.forms).
  if (outer.forms().rows() == 0) return true;
  if (outer.forms().rows() > inner.forms().rows()) return false;
  return rank(stack_rows(inner.forms(), outer.forms())) == inner.forms().rows();
}

std::size_t codim_in(const Subspace& s, const Subspace& v) {
  if (!contains(v, s)) fail(ErrorCode::NotContained, "subspace not contained in reference");
  return v.dim() - s.dim();
}

Subspace act_by_matrix(const RationalMatrix& g_inverse, const Subspace& s) {
  if (g_inverse.rows() != s.ambient_dim() || g_inverse.cols() != s.ambient_dim())
    fail(ErrorCode::AmbientMismatch, "matrix dimension does not match subspace");
  if (s.forms().rows() == 0) return s;
  return Subspace::from_forms(s.ambient_dim(), s.forms() * g_inverse);
}

bool subspace_contains_point(const Subspace& s, const std::vector<Rational>& x) {
  if (x.size() != s.ambient_dim())
    fail(ErrorCode::AmbientMismatch, "point dimension does not match subspace");
  const RationalMatrix& f = s.forms();
  for (std::size_t i = 0; i < f.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < f.cols(); ++j) acc += f.at(i, j) * x[j];
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace arrlab
