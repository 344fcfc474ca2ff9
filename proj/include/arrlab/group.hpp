#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "arrlab/matrix.hpp"
#include "arrlab/subspace.hpp"

namespace arrlab {

inline constexpr std::size_t kDefaultGroupCap = 10000;

struct GroupElement {
  RationalMatrix matrix;
  RationalMatrix inverse_matrix;
};

// A finite group of invertible rational matrices, stored as the full element
// list in breadth-first order over generator words (element 0 is the
// identity). Closure beyond the cap is an error, never a truncation.
class FiniteMatrixGroup {
 public:
  static FiniteMatrixGroup generate(const std::vector<RationalMatrix>& generators,
                                    std::size_t cap = kDefaultGroupCap);
  static FiniteMatrixGroup trivial(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return elements_.size(); }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  bool is_trivial() const { return elements_.size() == 1; }

 private:
  FiniteMatrixGroup(std::size_t ambient_dim, std::vector<GroupElement> elements,
                    std::vector<GroupElement> generators)
      : ambient_dim_(ambient_dim),
        elements_(std::move(elements)),
        generators_(std::move(generators)) {}

  std::size_t ambient_dim_;
  std::vector<GroupElement> elements_;
  std::vector<GroupElement> generators_;
};

Subspace act(const GroupElement& g, const Subspace& s);

// V intersected with the kernels of (g - I) over the generators; fixing the
// generators fixes the whole group.
Subspace fixed_subspace(const FiniteMatrixGroup& g, const Subspace& v);

// Orbit {g.S}, deduplicated by canonical form, in group element order.
std::vector<Subspace> orbit(const FiniteMatrixGroup& g, const Subspace& s);

// codim-many independent forms defining L (relative to the ambient subspace v
// when given) such that every group element sends each form to +- itself.
// Requires every element to fix L setwise; throws NotRealizable when the
// induced action on the form space has no simultaneous +-1 eigenbasis over Q.
RationalMatrix sign_eigenforms(const FiniteMatrixGroup& g, const Subspace& l);
RationalMatrix sign_eigenforms(const FiniteMatrixGroup& g, const Subspace& l,
                               const Subspace& v);

// The same abstract group acting diagonally on (R^m)^copies.
FiniteMatrixGroup diagonal_product_group(const FiniteMatrixGroup& g, std::size_t copies);

// p when the group is elementary abelian of prime exponent p (and nontrivial).
std::optional<unsigned long> elementary_abelian_prime(const FiniteMatrixGroup& g);

}  // namespace arrlab
