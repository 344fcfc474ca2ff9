#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arrlab/group.hpp"
#include "arrlab/subspace.hpp"

namespace arrlab {

// A finite family of linear subspaces of an ambient subspace V of R^m. The
// object of interest downstream is the complement V \ union(members).
class Arrangement {
 public:
  // Validates member containment, drops exact duplicates (keeping the first
  // occurrence), and rejects members equal to the ambient. Names default to
  // "L0", "L1", ...
  Arrangement(Subspace ambient, std::vector<Subspace> members,
              std::vector<std::string> names = {});

  static Arrangement in_full_space(std::size_t ambient_dim, std::vector<Subspace> members,
                                   std::vector<std::string> names = {});

  const Subspace& ambient() const { return ambient_; }
  const std::vector<Subspace>& members() const { return members_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return members_.size(); }
  std::size_t ambient_dim() const { return ambient_.ambient_dim(); }

 private:
  Subspace ambient_;
  std::vector<Subspace> members_;
  std::vector<std::string> names_;
};

std::vector<std::size_t> maximal_member_indices(const Arrangement& a);
std::vector<Subspace> maximal_members(const Arrangement& a);

// min over members of codim_in(member, ambient); EmptyArrangement when empty.
std::size_t arrangement_codim(const Arrangement& a);

// Evaluated over the full intersection poset, not only the listed members:
// every maximal element has codimension c and c divides every relative
// codimension between comparable poset elements.
bool is_c_arrangement(const Arrangement& a, std::size_t c);

// Minimal G-invariant arrangement containing a; idempotent.
Arrangement g_closure(const FiniteMatrixGroup& g, const Arrangement& a);
bool is_g_invariant(const FiniteMatrixGroup& g, const Arrangement& a);

// True iff every member contains the fixed subspace of the group action on
// the ambient (condition (E)).
bool check_condition_E(const Arrangement& a, const FiniteMatrixGroup& g);

// x repeated `copies` times.
std::vector<Rational> diagonal_embed(const std::vector<Rational>& x, std::size_t copies);
std::vector<double> diagonal_embed(const std::vector<double>& x, std::size_t copies);

enum class BlowUpChoice { Auto, Equivariant, Explicit };

struct BlowUpOptions {
  BlowUpChoice choice = BlowUpChoice::Auto;
  const FiniteMatrixGroup* group = nullptr;        // for Equivariant
  std::vector<RationalMatrix> explicit_forms;      // per maximal member, k_i x m
};

struct BlowUpBlock {
  std::size_t copy_offset;  // first ambient copy used by this member
  std::size_t codim;        // k_i = number of copies / forms
};

struct BlowUpResult {
  Arrangement arrangement;                 // lives in V^K inside (R^m)^K
  std::vector<BlowUpBlock> blocks;         // per maximal member
  std::vector<RationalMatrix> chosen_forms;  // the forms distributed per member
  std::vector<std::string> warnings;
};

// Distributes k_i defining forms of each maximal element over k_i separate
// ambient copies. Non-maximal members are ignored (with a warning). The
// equivariant choice uses sign_eigenforms and requires every group element to
// fix every maximal member.
BlowUpResult blow_up(const Arrangement& a, const BlowUpOptions& options = {});

}  // namespace arrlab
