#include "arrlab/ration.hpp"

#include <numeric>
#include <sstream>

#include "arrlab/errors.hpp"

namespace arrlab {

Ration Ration::from_parts(const std::vector<long>& parts) {
  if (parts.empty() || parts.size() % 2 != 0)
    fail(ErrorCode::BadParam, "ration needs 2k parts");
  const std::size_t k = parts.size() / 2;
  long sum = 0;
  for (long a : parts) {
    if (a < 1) fail(ErrorCode::BadParam, "ration parts must be positive integers");
    sum += a;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (parts[i] != parts[k + i])
      fail(ErrorCode::BadParam, "ration must be symmetric: a_i = a_{k+i}");
  }
  if (sum % 2 != 0) fail(ErrorCode::Internal, "symmetric parts always sum evenly");
  Ration r;
  r.n = static_cast<std::size_t>(sum);
  r.k = k;
  r.parts = parts;
  return r;
}

Ration Ration::parse(const std::string& comma_separated) {
  std::vector<long> parts;
  std::stringstream ss(comma_separated);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      parts.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad ration entry '" + item + "'");
    }
  }
  return from_parts(parts);
}

std::size_t Ration::block_start(std::size_t t) const {
  if (t < 1 || t > 2 * k) fail(ErrorCode::BadParam, "block index out of range");
  std::size_t beta = 1;
  for (std::size_t i = 0; i + 1 < t; ++i) beta += static_cast<std::size_t>(parts[i]);
  return beta;
}

std::string Ration::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  return os.str();
}

}  // namespace arrlab
