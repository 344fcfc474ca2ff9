#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace arrlab {

// Weighted points on the unit sphere S^{d-1}, the discrete stand-in for a
// Borel probability measure. Points are unit vectors; weights are
// non-negative and sum to one.
struct MeasureCloud {
  std::size_t dim = 0;
  std::vector<double> points;   // row-major, count x dim
  std::vector<double> weights;  // count entries

  std::size_t count() const { return dim == 0 ? 0 : points.size() / dim; }
  const double* point(std::size_t i) const { return points.data() + i * dim; }

  // Validates shapes, renormalizes each point onto the sphere (rejecting
  // norms far from 1) and rescales the weights to total mass one.
  static MeasureCloud make(std::size_t dim, std::vector<double> points,
                           std::vector<double> weights);

  // One row per point: weight,x1,...,xd. A non-numeric first row is treated
  // as a header.
  static MeasureCloud from_csv(const std::string& text);
  std::string to_csv() const;
};

}  // namespace arrlab
