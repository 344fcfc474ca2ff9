#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace arrlab {

// Symmetric integer proportions a_1..a_2k with a_i = a_{k+i} and sum n (even).
// The normalized proportions a_i / n are derived on demand, never stored.
struct Ration {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<long> parts;  // size 2k, all >= 1

  static Ration from_parts(const std::vector<long>& parts);
  static Ration parse(const std::string& comma_separated);

  // 1-based cut index where block t (1-based, t in 1..2k) starts:
  // beta_t = 1 + a_1 + ... + a_{t-1}.
  std::size_t block_start(std::size_t t) const;
  double alpha(std::size_t t) const {
    return static_cast<double>(parts[t - 1]) / static_cast<double>(n);
  }
  std::string to_string() const;
};

}  // namespace arrlab
