#include "arrlab/group.hpp"

#include <deque>
#include <map>
#include <string>

#include "arrlab/errors.hpp"

namespace arrlab {

FiniteMatrixGroup FiniteMatrixGroup::generate(
    const std::vector<RationalMatrix>& generators, std::size_t cap) {
  if (generators.empty()) fail(ErrorCode::BadParam, "no generators given");
  const std::size_t m = generators.front().rows();
  std::vector<GroupElement> gens;
  for (const RationalMatrix& g : generators) {
    if (g.rows() != m || g.cols() != m)
      fail(ErrorCode::BadParam, "generators must be square matrices of equal size");
    gens.push_back(GroupElement{g, inverse(g)});
  }

  std::vector<GroupElement> elements;
  std::map<RationalMatrix, std::size_t> seen;
  std::deque<std::size_t> queue;
  elements.push_back(GroupElement{RationalMatrix::identity(m), RationalMatrix::identity(m)});
  seen.emplace(elements[0].matrix, 0);
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    for (const GroupElement& g : gens) {
      RationalMatrix product = elements[idx].matrix * g.matrix;
      if (seen.count(product)) continue;
      if (elements.size() >= cap)
        fail(ErrorCode::CapExceeded,
             "group closure exceeded cap of " + std::to_string(cap) + " elements");
      RationalMatrix product_inv = g.inverse_matrix * elements[idx].inverse_matrix;
      seen.emplace(product, elements.size());
      elements.push_back(GroupElement{std::move(product), std::move(product_inv)});
      queue.push_back(elements.size() - 1);
    }
  }
  return FiniteMatrixGroup(m, std::move(elements), std::move(gens));
}

FiniteMatrixGroup FiniteMatrixGroup::trivial(std::size_t ambient_dim) {
  return generate({RationalMatrix::identity(ambient_dim)}, 2);
}

Subspace act(const GroupElement& g, const Subspace& s) {
  return act_by_matrix(g.inverse_matrix, s);
}

Subspace fixed_subspace(const FiniteMatrixGroup& g, const Subspace& v) {
  if (g.ambient_dim() != v.ambient_dim())
    fail(ErrorCode::AmbientMismatch, "group and subspace dimensions differ");
  RationalMatrix constraints = v.forms();
  const RationalMatrix id = RationalMatrix::identity(g.ambient_dim());
  for (const GroupElement& gen : g.generators()) {
    constraints = stack_rows(constraints, gen.matrix - id);
  }
  return Subspace::from_forms(v.ambient_dim(), constraints);
}

std::vector<Subspace> orbit(const FiniteMatrixGroup& g, const Subspace& s) {
  if (g.ambient_dim() != s.ambient_dim())
    fail(ErrorCode::AmbientMismatch, "group and subspace dimensions differ");
  std::vector<Subspace> result;
  for (const GroupElement& e : g.elements()) {
    Subspace image = act(e, s);
    bool known = false;
    for (const Subspace& existing : result) {
      if (existing == image) {
        known = true;
        break;
      }
    }
    if (!known) result.push_back(std::move(image));
  }
  return result;
}

namespace {

// Left-kernel basis of m: rows x with x m = 0.
RationalMatrix left_nullspace_rows(const RationalMatrix& m) {
  return nullspace_rows(m.transpose());
}

// Basis rows of the intersection of two row spans.
RationalMatrix rowspan_intersection(const RationalMatrix& a, const RationalMatrix& b,
                                    std::size_t width) {
  const Subspace sa = Subspace::from_span(width, a);
  const Subspace sb = Subspace::from_span(width, b);
  return intersect(sa, sb).span_rows();
}

}  // namespace

RationalMatrix sign_eigenforms(const FiniteMatrixGroup& g, const Subspace& l) {
  return sign_eigenforms(g, l, Subspace::full(l.ambient_dim()));
}

RationalMatrix sign_eigenforms(const FiniteMatrixGroup& g, const Subspace& l,
                               const Subspace& v) {
  if (g.ambient_dim() != l.ambient_dim())
    fail(ErrorCode::AmbientMismatch, "group and subspace dimensions differ");
  if (!contains(v, l))
    fail(ErrorCode::BadParam, "subspace not contained in the given ambient");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (act(g.element(i), l) != l)
      fail(ErrorCode::PreconditionViolated,
           "group element " + std::to_string(i) + " moves the subspace");
  }

  const RationalMatrix& fl = l.forms();
  const std::size_t r = fl.rows();
  const std::size_t target = r - v.forms().rows();
  if (target == 0) return RationalMatrix(0, l.ambient_dim());

  std::vector<std::size_t> pivots;
  rref_with_pivots(fl, &pivots);

  // Induced action on the form space, in coordinates relative to the rows of
  // fl: for X with rowspace(X) <= rowspace(fl), the coefficient matrix is X
  // restricted to fl's pivot columns (those columns of fl form an identity).
  auto coordinates_of = [&](const RationalMatrix& x) {
    RationalMatrix c(x.rows(), r);
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t s = 0; s < r; ++s) c.at(i, s) = x.at(i, pivots[s]);
    return c;
  };

  std::vector<RationalMatrix> induced;  // per generator: v -> v * C
  for (const GroupElement& gen : g.generators()) {
    induced.push_back(coordinates_of(fl * gen.inverse_matrix));
  }

  // Split coordinate space into joint +-1 eigenspaces, one generator at a
  // time. A block that fails to decompose witnesses non-realizability.
  std::vector<RationalMatrix> blocks{RationalMatrix::identity(r)};
  for (const RationalMatrix& c : induced) {
    std::vector<RationalMatrix> next;
    for (const RationalMatrix& b : blocks) {
      const RationalMatrix bc = b * c;
      const RationalMatrix plus = left_nullspace_rows(bc - b);
      const RationalMatrix minus = left_nullspace_rows(bc + b);
      if (plus.rows() + minus.rows() != b.rows())
        fail(ErrorCode::NotRealizable,
             "induced action is not +-1 diagonalizable over the rationals");
      if (plus.rows() > 0) next.push_back(rref(plus * b));
      if (minus.rows() > 0) next.push_back(rref(minus * b));
    }
    blocks = std::move(next);
  }

  // Inside each joint eigenspace, keep a complement of the ambient's form
  // space; those representatives stay exact +-1 eigenvectors.
  const RationalMatrix v_coords = coordinates_of(v.forms());
  RationalMatrix chosen_coords(0, r);
  for (const RationalMatrix& b : blocks) {
    RationalMatrix inside =
        v.forms().rows() == 0 ? RationalMatrix(0, r) : rowspan_intersection(b, v_coords, r);
    RationalMatrix basis = inside;
    for (std::size_t i = 0; i < b.rows(); ++i) {
      RationalMatrix candidate = stack_rows(basis, b.row(i));
      if (rank(candidate) > basis.rows()) {
        basis = rref(candidate);
        chosen_coords.append_row(b.row(i));
      }
    }
  }
  if (chosen_coords.rows() != target)
    fail(ErrorCode::Internal, "eigenspace split lost track of the ambient forms");

  RationalMatrix forms(0, l.ambient_dim());
  for (std::size_t i = 0; i < chosen_coords.rows(); ++i) {
    forms.append_row(primitive_row(chosen_coords.row(i) * fl));
  }

  // Exhaustive check over every element, not only the generators.
  for (std::size_t e = 0; e < g.size(); ++e) {
    const GroupElement& ge = g.element(e);
    for (std::size_t i = 0; i < forms.rows(); ++i) {
      const RationalMatrix image = forms.row(i) * ge.inverse_matrix;
      if (image != forms.row(i) && image != -forms.row(i))
        fail(ErrorCode::NotRealizable,
             "element " + std::to_string(e) + " does not act by +-1 on a chosen form");
    }
  }
  return forms;
}

FiniteMatrixGroup diagonal_product_group(const FiniteMatrixGroup& g, std::size_t copies) {
  if (copies == 0) fail(ErrorCode::BadParam, "need at least one copy");
  std::vector<RationalMatrix> gens;
  for (const GroupElement& e : g.generators()) gens.push_back(block_diagonal(e.matrix, copies));
  return FiniteMatrixGroup::generate(gens, g.size() + 1);
}

std::optional<unsigned long> elementary_abelian_prime(const FiniteMatrixGroup& g) {
  if (g.is_trivial()) return std::nullopt;
  // Abelian?
  for (const GroupElement& a : g.generators())
    for (const GroupElement& b : g.generators())
      if (a.matrix * b.matrix != b.matrix * a.matrix) return std::nullopt;
  // Common prime order of every non-identity element.
  const RationalMatrix id = RationalMatrix::identity(g.ambient_dim());
  unsigned long p = 0;
  for (std::size_t i = 1; i < g.size(); ++i) {
    RationalMatrix power = g.element(i).matrix;
    unsigned long order = 1;
    while (power != id) {
      power = power * g.element(i).matrix;
      ++order;
      if (order > g.size()) fail(ErrorCode::Internal, "element order exceeds group size");
    }
    if (order == 1) continue;
    if (p == 0)
      p = order;
    else if (order != p)
      return std::nullopt;
  }
  if (p < 2) return std::nullopt;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return std::nullopt;
  return p;
}

}  // namespace arrlab
