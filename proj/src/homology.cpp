#include "arrlab/homology.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "arrlab/errors.hpp"

namespace arrlab {

namespace {

unsigned thread_cap() {
  unsigned cap = std::thread::hardware_concurrency();
  if (cap == 0) cap = 1;
  if (const char* env = std::getenv("ARRLAB_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1 && parsed < 1024) cap = static_cast<unsigned>(parsed);
  }
  return cap;
}

std::size_t field_rank(const RationalMatrix& m, const FieldDescriptor& field) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return field.is_rationals() ? rank(m) : rank_mod_p(m, field.p);
}

}  // namespace

std::vector<RationalMatrix> boundary_matrices(const SimplicialComplex& k) {
  const auto faces = faces_by_dimension(k);
  std::vector<RationalMatrix> out;
  if (faces.empty()) return out;

  // Augmentation: every vertex maps to the empty simplex.
  RationalMatrix augmentation(1, faces[0].size());
  for (std::size_t j = 0; j < faces[0].size(); ++j) augmentation.at(0, j) = 1;
  out.push_back(std::move(augmentation));

  for (std::size_t q = 1; q < faces.size(); ++q) {
    std::map<std::vector<int>, std::size_t> row_index;
    for (std::size_t i = 0; i < faces[q - 1].size(); ++i)
      row_index.emplace(faces[q - 1][i], i);
    RationalMatrix boundary(faces[q - 1].size(), faces[q].size());
    for (std::size_t j = 0; j < faces[q].size(); ++j) {
      const std::vector<int>& simplex = faces[q][j];
      int sign = 1;
      for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
        std::vector<int> face;
        for (std::size_t t = 0; t < simplex.size(); ++t)
          if (t != drop) face.push_back(simplex[t]);
        boundary.at(row_index.at(face), j) = sign;
        sign = -sign;
      }
    }
    out.push_back(std::move(boundary));
  }
  return out;
}

BettiTable reduced_betti(const SimplicialComplex& k, const FieldDescriptor& field) {
  BettiTable table;
  table.field = field;
  table.reduced = true;

  const auto faces = faces_by_dimension(k);
  if (faces.empty()) {
    table.betti[-1] = 1;  // only the empty simplex
    return table;
  }
  const auto boundaries = boundary_matrices(k);
  std::vector<std::size_t> ranks(boundaries.size() + 1, 0);
  for (std::size_t q = 0; q < boundaries.size(); ++q)
    ranks[q] = field_rank(boundaries[q], field);

  for (std::size_t q = 0; q < faces.size(); ++q) {
    const long long dim_q = static_cast<long long>(faces[q].size());
    const long long value = dim_q - static_cast<long long>(ranks[q]) -
                            static_cast<long long>(q + 1 < ranks.size() ? ranks[q + 1] : 0);
    if (value != 0) table.betti[static_cast<int>(q)] = value;
  }
  // Reduced degree -1 vanishes once a vertex exists (augmentation has rank 1).
  const long long minus_one = 1 - static_cast<long long>(ranks[0]);
  if (minus_one != 0) table.betti[-1] = minus_one;
  return table;
}

BettiTable gm_betti(const IntersectionPoset& poset, const FieldDescriptor& field) {
  const std::size_t n = poset.size();
  std::vector<BettiTable> interval_tables(n);

  const unsigned workers =
      std::min<unsigned>(thread_cap(), n > 1 ? static_cast<unsigned>(n - 1) : 1u);
  if (workers <= 1 || n <= 2) {
    for (std::size_t x = 1; x < n; ++x)
      interval_tables[x] = reduced_betti(order_complex(poset, x), field);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{1};
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&]() {
        for (;;) {
          const std::size_t x = next.fetch_add(1);
          if (x >= n) return;
          interval_tables[x] = reduced_betti(order_complex(poset, x), field);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  std::map<int, long long> reduced_total;
  for (std::size_t x = 1; x < n; ++x) {
    const int codim = static_cast<int>(poset.codim_of(x));
    for (const auto& [degree, value] : interval_tables[x].betti) {
      const int i = codim - 2 - degree;
      if (i >= 0 && value != 0) reduced_total[i] += value;
    }
  }

  BettiTable table;
  table.field = field;
  table.reduced = false;
  table.betti[0] = 1 + (reduced_total.count(0) ? reduced_total[0] : 0);
  for (const auto& [degree, value] : reduced_total) {
    if (degree >= 1 && value != 0) table.betti[degree] = value;
  }
  return table;
}

BettiTable gm_betti(const Arrangement& a, const FieldDescriptor& field) {
  if (a.size() == 0) fail(ErrorCode::EmptyArrangement, "arrangement has no members");
  return gm_betti(intersection_poset(a), field);
}

}  // namespace arrlab
