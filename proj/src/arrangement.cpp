#include "arrlab/arrangement.hpp"

#include <algorithm>
#include <string>

#include "arrlab/errors.hpp"
#include "arrlab/poset.hpp"

namespace arrlab {

Arrangement::Arrangement(Subspace ambient, std::vector<Subspace> members,
                         std::vector<std::string> names)
    : ambient_(std::move(ambient)) {
  if (!names.empty() && names.size() != members.size())
    fail(ErrorCode::BadParam, "member/name count mismatch");
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Subspace& s = members[i];
    if (s.ambient_dim() != ambient_.ambient_dim())
      fail(ErrorCode::AmbientMismatch, "member does not match ambient dimension");
    if (!contains(ambient_, s))
      fail(ErrorCode::BadParam, "member not contained in the ambient subspace");
    if (s == ambient_)
      fail(ErrorCode::BadParam, "member equals the ambient subspace");
    const bool duplicate =
        std::any_of(members_.begin(), members_.end(),
                    [&](const Subspace& existing) { return existing == s; });
    if (duplicate) continue;
    members_.push_back(s);
    names_.push_back(names.empty() ? "L" + std::to_string(members_.size() - 1)
                                   : names[i]);
  }
}

Arrangement Arrangement::in_full_space(std::size_t ambient_dim,
                                       std::vector<Subspace> members,
                                       std::vector<std::string> names) {
  return Arrangement(Subspace::full(ambient_dim), std::move(members), std::move(names));
}

std::vector<std::size_t> maximal_member_indices(const Arrangement& a) {
  std::vector<std::size_t> result;
  const auto& members = a.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      if (contains(members[j], members[i]) && members[i] != members[j]) {
        dominated = true;
        break;
      }
    }
    if (!dominated) result.push_back(i);
  }
  return result;
}

std::vector<Subspace> maximal_members(const Arrangement& a) {
  std::vector<Subspace> out;
  for (std::size_t i : maximal_member_indices(a)) out.push_back(a.members()[i]);
  return out;
}

std::size_t arrangement_codim(const Arrangement& a) {
  if (a.size() == 0) fail(ErrorCode::EmptyArrangement, "arrangement has no members");
  std::size_t best = a.ambient().dim();
  for (const Subspace& s : a.members())
    best = std::min(best, codim_in(s, a.ambient()));
  return best;
}

bool is_c_arrangement(const Arrangement& a, std::size_t c) {
  if (a.size() == 0) fail(ErrorCode::EmptyArrangement, "arrangement has no members");
  if (c == 0) fail(ErrorCode::BadParam, "c must be positive");
  for (const Subspace& s : maximal_members(a)) {
    if (codim_in(s, a.ambient()) != c) return false;
  }
  const IntersectionPoset poset = intersection_poset(a);
  for (std::size_t i = 0; i < poset.size(); ++i) {
    for (std::size_t j = 0; j < poset.size(); ++j) {
      if (i == j || !poset.leq(i, j)) continue;
      // poset order i <= j means subspace(i) contains subspace(j)
      const std::size_t rel = poset.element(i).dim() - poset.element(j).dim();
      if (rel % c != 0) return false;
    }
  }
  return true;
}

namespace {

void require_preserves_ambient(const FiniteMatrixGroup& g, const Arrangement& a) {
  if (g.ambient_dim() != a.ambient_dim())
    fail(ErrorCode::AmbientMismatch, "group and arrangement dimensions differ");
  for (const GroupElement& e : g.generators()) {
    if (act(e, a.ambient()) != a.ambient())
      fail(ErrorCode::AmbientNotPreserved,
           "a generator does not preserve the ambient subspace");
  }
}

}  // namespace

Arrangement g_closure(const FiniteMatrixGroup& g, const Arrangement& a) {
  require_preserves_ambient(g, a);
  std::vector<Subspace> members = a.members();
  std::vector<std::string> names = a.names();
  for (std::size_t mi = 0; mi < a.size(); ++mi) {
    for (std::size_t e = 0; e < g.size(); ++e) {
      Subspace image = act(g.element(e), a.members()[mi]);
      const bool known = std::any_of(members.begin(), members.end(),
                                     [&](const Subspace& s) { return s == image; });
      if (!known) {
        members.push_back(std::move(image));
        names.push_back(a.names()[mi] + ".g" + std::to_string(e));
      }
    }
  }
  return Arrangement(a.ambient(), std::move(members), std::move(names));
}

bool is_g_invariant(const FiniteMatrixGroup& g, const Arrangement& a) {
  require_preserves_ambient(g, a);
  for (const Subspace& s : a.members()) {
    for (std::size_t e = 0; e < g.size(); ++e) {
      Subspace image = act(g.element(e), s);
      const bool known = std::any_of(a.members().begin(), a.members().end(),
                                     [&](const Subspace& t) { return t == image; });
      if (!known) return false;
    }
  }
  return true;
}

bool check_condition_E(const Arrangement& a, const FiniteMatrixGroup& g) {
  require_preserves_ambient(g, a);
  const Subspace fixed = fixed_subspace(g, a.ambient());
  for (const Subspace& s : a.members()) {
    if (!contains(s, fixed)) return false;
  }
  return true;
}

std::vector<Rational> diagonal_embed(const std::vector<Rational>& x, std::size_t copies) {
  std::vector<Rational> out;
  out.reserve(x.size() * copies);
  for (std::size_t c = 0; c < copies; ++c) out.insert(out.end(), x.begin(), x.end());
  return out;
}

std::vector<double> diagonal_embed(const std::vector<double>& x, std::size_t copies) {
  std::vector<double> out;
  out.reserve(x.size() * copies);
  for (std::size_t c = 0; c < copies; ++c) out.insert(out.end(), x.begin(), x.end());
  return out;
}

namespace {

// Greedy k_i forms from L's canonical forms that extend the ambient's forms
// to a basis of L's full form space.
RationalMatrix auto_relative_forms(const Subspace& member, const Subspace& ambient) {
  RationalMatrix basis = ambient.forms();
  RationalMatrix chosen(0, member.ambient_dim());
  const std::size_t want = member.forms().rows() - ambient.forms().rows();
  for (std::size_t i = 0; i < member.forms().rows() && chosen.rows() < want; ++i) {
    RationalMatrix candidate = stack_rows(basis, member.forms().row(i));
    if (rank(candidate) > basis.rows()) {
      basis = rref(candidate);
      chosen.append_row(member.forms().row(i));
    }
  }
  return chosen;
}

void validate_explicit_forms(const RationalMatrix& forms, const Subspace& member,
                             const Subspace& ambient) {
  const std::size_t k = member.forms().rows() - ambient.forms().rows();
  if (forms.rows() != k || forms.cols() != member.ambient_dim())
    fail(ErrorCode::BadExplicitForms, "wrong number or length of explicit forms");
  const RationalMatrix stacked = stack_rows(ambient.forms(), forms);
  if (rank(stacked) != ambient.forms().rows() + k)
    fail(ErrorCode::BadExplicitForms, "explicit forms are dependent over the ambient");
  if (Subspace::from_forms(member.ambient_dim(), stacked) != member)
    fail(ErrorCode::BadExplicitForms, "explicit forms do not define the member");
}

}  // namespace

BlowUpResult blow_up(const Arrangement& a, const BlowUpOptions& options) {
  if (a.size() == 0) fail(ErrorCode::EmptyArrangement, "arrangement has no members");
  const std::size_t m = a.ambient_dim();
  const std::vector<std::size_t> maximal = maximal_member_indices(a);
  std::vector<std::string> warnings;
  if (maximal.size() != a.size()) {
    warnings.push_back("blow-up ignores " + std::to_string(a.size() - maximal.size()) +
                       " non-maximal member(s)");
  }
  if (options.choice == BlowUpChoice::Equivariant && options.group == nullptr)
    fail(ErrorCode::BadParam, "equivariant blow-up needs a group");
  if (options.choice == BlowUpChoice::Explicit &&
      options.explicit_forms.size() != maximal.size())
    fail(ErrorCode::BadExplicitForms, "need one form matrix per maximal member");

  std::vector<RationalMatrix> chosen;
  std::vector<BlowUpBlock> blocks;
  std::size_t total_copies = 0;
  for (std::size_t idx = 0; idx < maximal.size(); ++idx) {
    const Subspace& member = a.members()[maximal[idx]];
    RationalMatrix forms;
    switch (options.choice) {
      case BlowUpChoice::Auto:
        forms = auto_relative_forms(member, a.ambient());
        break;
      case BlowUpChoice::Equivariant:
        forms = sign_eigenforms(*options.group, member, a.ambient());
        break;
      case BlowUpChoice::Explicit:
        forms = options.explicit_forms[idx];
        validate_explicit_forms(forms, member, a.ambient());
        break;
    }
    const std::size_t k = codim_in(member, a.ambient());
    if (forms.rows() != k) fail(ErrorCode::Internal, "form count does not match codim");
    blocks.push_back(BlowUpBlock{total_copies, k});
    chosen.push_back(std::move(forms));
    total_copies += k;
  }

  // Product ambient V^K and one member per maximal element, cut out by the
  // i-th chosen form read on the i-th copy of the member's block.
  const std::size_t product_dim = m * total_copies;
  RationalMatrix ambient_forms(0, product_dim);
  for (std::size_t c = 0; c < total_copies; ++c) {
    for (std::size_t i = 0; i < a.ambient().forms().rows(); ++i) {
      RationalMatrix row(1, product_dim);
      for (std::size_t j = 0; j < m; ++j) row.at(0, c * m + j) = a.ambient().forms().at(i, j);
      ambient_forms.append_row(row);
    }
  }
  const Subspace product_ambient = Subspace::from_forms(product_dim, ambient_forms);

  std::vector<Subspace> members;
  std::vector<std::string> names;
  for (std::size_t idx = 0; idx < maximal.size(); ++idx) {
    RationalMatrix forms = ambient_forms;
    for (std::size_t i = 0; i < blocks[idx].codim; ++i) {
      const std::size_t copy = blocks[idx].copy_offset + i;
      RationalMatrix row(1, product_dim);
      for (std::size_t j = 0; j < m; ++j) row.at(0, copy * m + j) = chosen[idx].at(i, j);
      forms.append_row(row);
    }
    members.push_back(Subspace::from_forms(product_dim, forms));
    names.push_back(a.names()[maximal[idx]] + ".bar");
  }

  return BlowUpResult{Arrangement(product_ambient, std::move(members), std::move(names)),
                      std::move(blocks), std::move(chosen), std::move(warnings)};
}

}  // namespace arrlab
