#include "arrlab/measure.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "arrlab/errors.hpp"

namespace arrlab {

MeasureCloud MeasureCloud::make(std::size_t dim, std::vector<double> points,
                                std::vector<double> weights) {
  if (dim < 3) fail(ErrorCode::BadParam, "measures need ambient dimension >= 3");
  if (weights.empty()) fail(ErrorCode::BadParam, "measure has no points");
  if (points.size() != weights.size() * dim)
    fail(ErrorCode::BadParam, "point/weight count mismatch");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w))
      fail(ErrorCode::BadParam, "weights must be finite and non-negative");
    total += w;
  }
  if (!(total > 0.0)) fail(ErrorCode::BadParam, "total weight must be positive");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    double norm_sq = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      const double v = points[i * dim + j];
      if (!std::isfinite(v)) fail(ErrorCode::BadParam, "non-finite coordinate");
      norm_sq += v * v;
    }
    const double norm = std::sqrt(norm_sq);
    if (norm < 0.9 || norm > 1.1)
      fail(ErrorCode::BadParam, "point is not close to the unit sphere");
    for (std::size_t j = 0; j < dim; ++j) points[i * dim + j] /= norm;
  }
  for (double& w : weights) w /= total;
  MeasureCloud cloud;
  cloud.dim = dim;
  cloud.points = std::move(points);
  cloud.weights = std::move(weights);
  return cloud;
}

MeasureCloud MeasureCloud::from_csv(const std::string& text) {
  std::vector<double> points;
  std::vector<double> weights;
  std::size_t dim = 0;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(lines, line)) {
    ++line_number;
    if (line.empty() || line == "\r") continue;
    std::vector<double> row;
    std::istringstream fields(line);
    std::string field;
    bool numeric = true;
    while (std::getline(fields, field, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(field, &used));
        while (used < field.size() &&
               std::isspace(static_cast<unsigned char>(field[used])))
          ++used;
        if (used != field.size()) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
      if (!numeric) break;
    }
    if (!numeric) {
      if (line_number == 1) continue;  // header row
      fail(ErrorCode::ParseError,
           "bad measure CSV at line " + std::to_string(line_number));
    }
    if (row.size() < 4)
      fail(ErrorCode::ParseError,
           "measure CSV rows need weight plus at least three coordinates");
    if (dim == 0) dim = row.size() - 1;
    if (row.size() != dim + 1)
      fail(ErrorCode::ParseError,
           "inconsistent column count at line " + std::to_string(line_number));
    weights.push_back(row[0]);
    for (std::size_t j = 1; j < row.size(); ++j) points.push_back(row[j]);
  }
  if (weights.empty()) fail(ErrorCode::ParseError, "measure CSV has no data rows");
  return make(dim, std::move(points), std::move(weights));
}

std::string MeasureCloud::to_csv() const {
  std::string out = "weight";
  for (std::size_t j = 1; j <= dim; ++j) out += ",x" + std::to_string(j);
  out += "\n";
  char buf[64];
  for (std::size_t i = 0; i < count(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", weights[i]);
    out += buf;
    for (std::size_t j = 0; j < dim; ++j) {
      std::snprintf(buf, sizeof(buf), ",%.17g", points[i * dim + j]);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

}  // namespace arrlab
