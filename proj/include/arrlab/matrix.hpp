#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "arrlab/rational.hpp"

namespace arrlab {

// Dense matrix over the rationals. Row-major storage; everything exact.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  RationalMatrix transpose() const;
  RationalMatrix row(std::size_t i) const;
  void append_row(const RationalMatrix& single_row);

  bool is_zero() const;
  bool is_zero_row(std::size_t i) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  RationalMatrix operator-() const;
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) {
    return !(a == b);
  }
  // Lexicographic over (rows, cols, entries); total order used for
  // deterministic dedup containers.
  friend bool operator<(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

// Vertical concatenation; column counts must agree.
RationalMatrix stack_rows(const RationalMatrix& top, const RationalMatrix& bottom);

// Reduced row-echelon form with zero rows removed. Idempotent; pivot entries
// are 1 and pivot columns are otherwise zero, so the result is a canonical
// representative of the row space.
RationalMatrix rref(const RationalMatrix& m);
RationalMatrix rref_with_pivots(const RationalMatrix& m, std::vector<std::size_t>* pivots);

std::size_t rank(const RationalMatrix& m);

// Rank of the entries reduced mod p. Requires every denominator prime to p.
std::size_t rank_mod_p(const RationalMatrix& m, unsigned long p);

// Rows spanning {x | m x = 0}, derived from the RREF free columns;
// deterministic and canonical given the row space of m.
RationalMatrix nullspace_rows(const RationalMatrix& m);

// Gauss-Jordan inverse; throws Singular for non-invertible input.
RationalMatrix inverse(const RationalMatrix& m);

// Scales a single row to the primitive integer vector with positive leading
// coefficient (used to present chosen defining forms).
RationalMatrix primitive_row(const RationalMatrix& single_row);

// g repeated `copies` times along the diagonal.
RationalMatrix block_diagonal(const RationalMatrix& g, std::size_t copies);

}  // namespace arrlab
