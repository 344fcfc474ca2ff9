#include "arrlab/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "arrlab/errors.hpp"

namespace arrlab {

IntersectionPoset::IntersectionPoset(std::vector<Subspace> elements,
                                     std::vector<std::vector<bool>> leq_table)
    : elements_(std::move(elements)), leq_(std::move(leq_table)) {
  const std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq_[i][j]) continue;
      bool is_cover = true;
      for (std::size_t k = 0; k < n && is_cover; ++k) {
        if (k != i && k != j && leq_[i][k] && leq_[k][j]) is_cover = false;
      }
      if (is_cover) covers_.emplace_back(i, j);
    }
  }
}

IntersectionPoset intersection_poset(const Arrangement& a, std::size_t cap) {
  if (a.size() == 0) fail(ErrorCode::EmptyArrangement, "arrangement has no members");
  std::vector<Subspace> elements;
  elements.push_back(a.ambient());
  std::map<Subspace, std::size_t> seen;
  seen.emplace(a.ambient(), 0);

  // Breadth-first closure: seed with the members, then intersect everything
  // new with every member until stable.
  std::vector<Subspace> frontier;
  for (const Subspace& s : a.members()) {
    if (!seen.count(s)) {
      seen.emplace(s, elements.size());
      elements.push_back(s);
      frontier.push_back(s);
    }
  }
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const Subspace& x : frontier) {
      for (const Subspace& member : a.members()) {
        Subspace meet = intersect(x, member);
        if (seen.count(meet)) continue;
        if (elements.size() >= cap)
          fail(ErrorCode::CapExceeded, "intersection poset exceeded element cap");
        seen.emplace(meet, elements.size());
        elements.push_back(meet);
        next.push_back(elements.back());
      }
    }
    frontier = std::move(next);
  }

  const std::size_t n = elements.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // i <=_P j  <=>  subspace(i) contains subspace(j)
      leq[i][j] = contains(elements[i], elements[j]);
    }
  }
  return IntersectionPoset(std::move(elements), std::move(leq));
}

SimplicialComplex order_complex(const IntersectionPoset& poset, std::size_t x) {
  if (x == 0 || x >= poset.size())
    fail(ErrorCode::BadElement, "order complex needs an element above the bottom");
  std::vector<std::size_t> interval;  // elements strictly between 0^ and x
  for (std::size_t i = 1; i < poset.size(); ++i) {
    if (i != x && poset.strictly_below(i, x)) interval.push_back(i);
  }
  const std::size_t v = interval.size();
  SimplicialComplex complex;
  complex.vertex_count = v;

  std::vector<std::vector<bool>> below(v, std::vector<bool>(v, false));
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j)
      below[i][j] = poset.strictly_below(interval[i], interval[j]);
  std::vector<std::vector<bool>> covers(v, std::vector<bool>(v, false));
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = 0; j < v; ++j) {
      if (!below[i][j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < v && direct; ++k)
        if (below[i][k] && below[k][j]) direct = false;
      covers[i][j] = direct;
    }
  }

  // Facets are the maximal chains: saturated paths in the cover graph from a
  // minimal to a maximal vertex of the interval.
  std::vector<int> chain;
  std::function<void(std::size_t)> grow = [&](std::size_t last) {
    bool extended = false;
    for (std::size_t j = 0; j < v; ++j) {
      if (covers[last][j]) {
        extended = true;
        chain.push_back(static_cast<int>(j));
        grow(j);
        chain.pop_back();
      }
    }
    if (!extended) complex.facets.push_back(chain);
  };
  for (std::size_t i = 0; i < v; ++i) {
    bool has_lower = false;
    for (std::size_t j = 0; j < v && !has_lower; ++j) has_lower = below[j][i];
    if (has_lower) continue;
    chain.assign(1, static_cast<int>(i));
    grow(i);
    chain.clear();
  }
  return complex;
}

std::vector<std::vector<std::vector<int>>> faces_by_dimension(const SimplicialComplex& k) {
  std::vector<std::set<std::vector<int>>> collected;
  for (const std::vector<int>& facet : k.facets) {
    const std::size_t n = facet.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
      std::vector<int> face;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (std::size_t(1) << b)) face.push_back(facet[b]);
      std::sort(face.begin(), face.end());
      const std::size_t q = face.size() - 1;
      if (collected.size() <= q) collected.resize(q + 1);
      collected[q].insert(std::move(face));
    }
  }
  std::vector<std::vector<std::vector<int>>> out(collected.size());
  for (std::size_t q = 0; q < collected.size(); ++q)
    out[q].assign(collected[q].begin(), collected[q].end());
  return out;
}

std::string hasse_dot(const IntersectionPoset& poset) {
  std::ostringstream os;
  os << "digraph intersection_poset {\n";
  os << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.size(); ++i) {
    os << "  n" << i << " [label=\"dim " << poset.element(i).dim() << ", codim "
       << poset.codim_of(i) << "\"];\n";
  }
  for (const auto& [lower, upper] : poset.covers()) {
    os << "  n" << lower << " -> n" << upper << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace arrlab
