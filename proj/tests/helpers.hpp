#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "arrlab/matrix.hpp"
#include "arrlab/measure.hpp"
#include "arrlab/subspace.hpp"

namespace testutil {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Deterministic, library-independent generator (splitmix64 core).
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t bits() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // in (0, 1]
  double uniform() { return (static_cast<double>(bits() >> 11) + 1.0) * 0x1.0p-53; }

  double gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  long integer(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(bits() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

inline arrlab::RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  arrlab::RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = arrlab::make_rational(rng.integer(-3, 3), rng.integer(1, 2));
  return m;
}

inline arrlab::RationalMatrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    arrlab::RationalMatrix m = random_matrix(rng, n, n);
    if (arrlab::rank(m) == n) return m;
  }
}

// Random proper subspace of R^m with 1 <= codim <= max_codim.
inline arrlab::Subspace random_subspace(Rng& rng, std::size_t m, std::size_t max_codim) {
  for (;;) {
    const std::size_t target = static_cast<std::size_t>(
        rng.integer(1, static_cast<long>(std::min(max_codim, m))));
    arrlab::RationalMatrix forms = random_matrix(rng, target, m);
    arrlab::Subspace s = arrlab::Subspace::from_forms(m, forms);
    if (s.codim() >= 1) return s;
  }
}

// Exact inverse-CDF von Mises-Fisher sampler on S^2 around the given mean.
inline arrlab::MeasureCloud vmf_cloud_s2(std::uint64_t seed, std::vector<double> mean,
                                         double kappa, std::size_t count) {
  Rng rng(seed);
  const double norm = std::sqrt(mean[0] * mean[0] + mean[1] * mean[1] + mean[2] * mean[2]);
  for (double& v : mean) v /= norm;
  // Orthonormal basis of the tangent plane.
  std::vector<double> a =
      std::abs(mean[0]) < 0.9 ? std::vector<double>{1, 0, 0} : std::vector<double>{0, 1, 0};
  std::vector<double> e1(3), e2(3);
  const double am = a[0] * mean[0] + a[1] * mean[1] + a[2] * mean[2];
  for (int i = 0; i < 3; ++i) e1[i] = a[i] - am * mean[i];
  const double e1n = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
  for (int i = 0; i < 3; ++i) e1[i] /= e1n;
  e2[0] = mean[1] * e1[2] - mean[2] * e1[1];
  e2[1] = mean[2] * e1[0] - mean[0] * e1[2];
  e2[2] = mean[0] * e1[1] - mean[1] * e1[0];

  std::vector<double> points;
  points.reserve(3 * count);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = rng.uniform();
    const double w = 1.0 + std::log(u + (1.0 - u) * std::exp(-2.0 * kappa)) / kappa;
    const double r = std::sqrt(std::max(0.0, 1.0 - w * w));
    const double phi = kTwoPi * rng.uniform();
    for (int c = 0; c < 3; ++c)
      points.push_back(w * mean[c] + r * (std::cos(phi) * e1[c] + std::sin(phi) * e2[c]));
  }
  return arrlab::MeasureCloud::make(3, std::move(points),
                                    std::vector<double>(count, 1.0));
}

// Gaussian-bump cloud on S^{d-1} for dimensions beyond 3.
inline arrlab::MeasureCloud bump_cloud(std::uint64_t seed, std::vector<double> mean,
                                       double spread, std::size_t count) {
  Rng rng(seed);
  const std::size_t d = mean.size();
  std::vector<double> points;
  points.reserve(d * count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> p(d);
    double norm = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      p[j] = mean[j] + spread * rng.gaussian();
      norm += p[j] * p[j];
    }
    norm = std::sqrt(norm);
    for (std::size_t j = 0; j < d; ++j) points.push_back(p[j] / norm);
  }
  return arrlab::MeasureCloud::make(d, std::move(points),
                                    std::vector<double>(count, 1.0));
}

// N equally weighted points on the circle spanned by the first two
// coordinates, offset so no point sits exactly on angle zero.
inline arrlab::MeasureCloud circle_cloud(std::size_t dim, std::size_t count) {
  std::vector<double> points;
  points.reserve(dim * count);
  for (std::size_t i = 0; i < count; ++i) {
    const double theta = kTwoPi * (static_cast<double>(i) + 0.5) / static_cast<double>(count);
    points.push_back(std::cos(theta));
    points.push_back(std::sin(theta));
    for (std::size_t j = 2; j < dim; ++j) points.push_back(0.0);
  }
  return arrlab::MeasureCloud::make(dim, std::move(points),
                                    std::vector<double>(count, 1.0));
}

// Region count of a central line arrangement in R^2 by enumerating the sign
// vectors realized on a dense grid; independent of the homology machinery.
inline int region_count_oracle(const std::vector<std::vector<double>>& line_normals) {
  std::vector<std::vector<int>> patterns;
  const int grid = 40;
  for (int xi = -grid; xi <= grid; ++xi) {
    for (int yi = -grid; yi <= grid; ++yi) {
      const double x = xi + 0.341, y = yi + 0.173;  // avoid the lines themselves
      std::vector<int> pattern;
      bool on_line = false;
      for (const auto& normal : line_normals) {
        const double v = normal[0] * x + normal[1] * y;
        if (std::abs(v) < 1e-9) {
          on_line = true;
          break;
        }
        pattern.push_back(v > 0 ? 1 : -1);
      }
      if (on_line) continue;
      bool known = false;
      for (const auto& existing : patterns)
        if (existing == pattern) {
          known = true;
          break;
        }
      if (!known) patterns.push_back(pattern);
    }
  }
  return static_cast<int>(patterns.size());
}

}  // namespace testutil
