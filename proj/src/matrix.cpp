#include "arrlab/matrix.hpp"

#include <algorithm>

#include "arrlab/errors.hpp"

namespace arrlab {

RationalMatrix::RationalMatrix(
    std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorCode::BadParam, "ragged initializer");
    for (long long v : r) entries_.emplace_back(make_rational(v));
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::row(std::size_t i) const {
  RationalMatrix r(1, cols_);
  for (std::size_t j = 0; j < cols_; ++j) r.at(0, j) = at(i, j);
  return r;
}

void RationalMatrix::append_row(const RationalMatrix& single_row) {
  if (single_row.rows() != 1) fail(ErrorCode::BadParam, "append_row expects one row");
  if (rows_ == 0 && cols_ == 0) cols_ = single_row.cols();
  if (single_row.cols() != cols_) fail(ErrorCode::BadParam, "column mismatch");
  for (std::size_t j = 0; j < cols_; ++j) entries_.push_back(single_row.at(0, j));
  ++rows_;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& v) { return v == 0; });
}

bool RationalMatrix::is_zero_row(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j)
    if (at(i, j) != 0) return false;
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::BadParam, "matrix product shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j) == 0) continue;
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorCode::BadParam, "matrix difference shape mismatch");
  RationalMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorCode::BadParam, "matrix sum shape mismatch");
  RationalMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix c(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) c.entries_[i] = -entries_[i];
  return c;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

bool operator<(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i] != b.entries_[i]) return a.entries_[i] < b.entries_[i];
  }
  return false;
}

RationalMatrix stack_rows(const RationalMatrix& top, const RationalMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) fail(ErrorCode::BadParam, "stack_rows column mismatch");
  RationalMatrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out.at(i, j) = top.at(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < bottom.cols(); ++j)
      out.at(top.rows() + i, j) = bottom.at(i, j);
  return out;
}

RationalMatrix rref_with_pivots(const RationalMatrix& m, std::vector<std::size_t>* pivots) {
  RationalMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t sel = lead;
    while (sel < rows && a.at(sel, col) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != lead) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(sel, j), a.at(lead, j));
    }
    const Rational inv_pivot = Rational(1) / a.at(lead, col);
    for (std::size_t j = col; j < cols; ++j) a.at(lead, j) *= inv_pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || a.at(i, col) == 0) continue;
      const Rational factor = a.at(i, col);
      for (std::size_t j = col; j < cols; ++j) a.at(i, j) -= factor * a.at(lead, j);
    }
    pivot_cols.push_back(col);
    ++lead;
  }
  RationalMatrix out(pivot_cols.size(), cols);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = a.at(i, j);
  if (pivots) *pivots = std::move(pivot_cols);
  return out;
}

RationalMatrix rref(const RationalMatrix& m) { return rref_with_pivots(m, nullptr); }

std::size_t rank(const RationalMatrix& m) { return rref(m).rows(); }

std::size_t rank_mod_p(const RationalMatrix& m, unsigned long p) {
  if (p < 2) fail(ErrorCode::BadParam, "modulus must be a prime >= 2");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<long long> a(rows * cols);
  const BigInt bp(static_cast<unsigned long long>(p));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational& v = m.at(i, j);
      BigInt den = denominator(v) % bp;
      if (den == 0)
        fail(ErrorCode::BadParam, "denominator divisible by p in rank_mod_p");
      BigInt num = numerator(v) % bp;
      if (num < 0) num += bp;
      // den^{-1} mod p by Fermat.
      long long d = den.convert_to<long long>() % static_cast<long long>(p);
      if (d < 0) d += static_cast<long long>(p);
      long long inv = 1, base = d, e = static_cast<long long>(p) - 2;
      while (e > 0) {
        if (e & 1) inv = (inv * base) % static_cast<long long>(p);
        base = (base * base) % static_cast<long long>(p);
        e >>= 1;
      }
      a[i * cols + j] = (num.convert_to<long long>() * inv) % static_cast<long long>(p);
    }
  }
  const long long lp = static_cast<long long>(p);
  std::size_t rank_count = 0;
  for (std::size_t col = 0; col < cols && rank_count < rows; ++col) {
    std::size_t sel = rank_count;
    while (sel < rows && a[sel * cols + col] % lp == 0) ++sel;
    if (sel == rows) continue;
    if (sel != rank_count)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a[sel * cols + j], a[rank_count * cols + j]);
    long long piv = a[rank_count * cols + col] % lp;
    if (piv < 0) piv += lp;
    long long inv = 1, base = piv, e = lp - 2;
    while (e > 0) {
      if (e & 1) inv = (inv * base) % lp;
      base = (base * base) % lp;
      e >>= 1;
    }
    for (std::size_t j = col; j < cols; ++j)
      a[rank_count * cols + j] = ((a[rank_count * cols + j] % lp) * inv) % lp;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank_count) continue;
      long long f = a[i * cols + col] % lp;
      if (f == 0) continue;
      for (std::size_t j = col; j < cols; ++j) {
        a[i * cols + j] = ((a[i * cols + j] - f * a[rank_count * cols + j]) % lp + lp * lp) % lp;
      }
    }
    ++rank_count;
  }
  return rank_count;
}

RationalMatrix nullspace_rows(const RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  const RationalMatrix r = rref_with_pivots(m, &pivots);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RationalMatrix basis(free_cols.size(), cols);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t fc = free_cols[k];
    basis.at(k, fc) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      basis.at(k, pivots[i]) = -r.at(i, fc);
    }
  }
  return basis;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::Singular, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug = stack_rows(m.transpose(), RationalMatrix::identity(n)).transpose();
  // aug is n x 2n: [m | I]
  std::vector<std::size_t> pivots;
  RationalMatrix r = rref_with_pivots(aug, &pivots);
  if (r.rows() != n || pivots.size() != n || pivots[n - 1] != n - 1)
    fail(ErrorCode::Singular, "matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

RationalMatrix primitive_row(const RationalMatrix& single_row) {
  if (single_row.rows() != 1) fail(ErrorCode::BadParam, "primitive_row expects one row");
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (std::size_t j = 0; j < single_row.cols(); ++j) {
    const Rational& v = single_row.at(0, j);
    if (v == 0) continue;
    num_gcd = gcd(num_gcd, BigInt(abs(numerator(v))));
    den_lcm = lcm(den_lcm, denominator(v));
  }
  RationalMatrix out = single_row;
  if (num_gcd == 0) return out;
  const Rational scale = Rational(den_lcm) / Rational(num_gcd);
  int sign = 0;
  for (std::size_t j = 0; j < out.cols(); ++j) {
    out.at(0, j) *= scale;
    if (sign == 0 && out.at(0, j) != 0) sign = out.at(0, j) > 0 ? 1 : -1;
  }
  if (sign < 0)
    for (std::size_t j = 0; j < out.cols(); ++j) out.at(0, j) = -out.at(0, j);
  return out;
}

RationalMatrix block_diagonal(const RationalMatrix& g, std::size_t copies) {
  const std::size_t n = g.rows();
  if (g.cols() != n) fail(ErrorCode::BadParam, "block_diagonal expects square blocks");
  RationalMatrix out(n * copies, n * copies);
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.at(c * n + i, c * n + j) = g.at(i, j);
  return out;
}

}  // namespace arrlab
