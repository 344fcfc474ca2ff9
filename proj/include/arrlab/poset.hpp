#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arrlab/arrangement.hpp"
#include "arrlab/subspace.hpp"

namespace arrlab {

inline constexpr std::size_t kDefaultPosetCap = 50000;

// Intersection poset of an arrangement: all intersections of non-empty
// member subfamilies plus the bottom element 0^ = ambient, ordered by reverse
// inclusion (the ambient sits below everything). Element 0 is the ambient;
// the rest follow in breadth-first intersection-closure order.
class IntersectionPoset {
 public:
  IntersectionPoset(std::vector<Subspace> elements, std::vector<std::vector<bool>> leq_table);

  std::size_t size() const { return elements_.size(); }
  const Subspace& element(std::size_t i) const { return elements_[i]; }
  const Subspace& ambient() const { return elements_[0]; }

  // i <= j in the poset, i.e. element(i) contains element(j) as a subspace.
  bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
  bool strictly_below(std::size_t i, std::size_t j) const {
    return i != j && leq_[i][j];
  }

  // codimension of an element relative to the ambient.
  std::size_t codim_of(std::size_t i) const {
    return elements_[0].dim() - elements_[i].dim();
  }

  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

 private:
  std::vector<Subspace> elements_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;  // (lower, upper)
};

IntersectionPoset intersection_poset(const Arrangement& a,
                                     std::size_t cap = kDefaultPosetCap);

// Simplicial complex given by its facets; faces are expanded on demand.
struct SimplicialComplex {
  std::size_t vertex_count = 0;
  std::vector<std::vector<int>> facets;  // each sorted ascending
};

// Order complex of the open interval (0^, x): vertices are the elements
// strictly between, simplices are the chains.
SimplicialComplex order_complex(const IntersectionPoset& poset, std::size_t x);

// All faces grouped by dimension (faces_by_dim[q] = q-dimensional faces),
// sorted; the empty face is implicit.
std::vector<std::vector<std::vector<int>>> faces_by_dimension(const SimplicialComplex& k);

// DOT digraph of the Hasse diagram, one node per element labeled with
// dim/codim, one edge per cover relation, deterministic order.
std::string hasse_dot(const IntersectionPoset& poset);

}  // namespace arrlab
