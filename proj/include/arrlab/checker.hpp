#pragma once

#include <optional>
#include <string>

#include "arrlab/arrangement.hpp"
#include "arrlab/field.hpp"

namespace arrlab {

enum class ConditionStatus {
  Satisfied,
  SatisfiedBySufficientCondition,
  Violated,
  Unknown,
};

const char* condition_status_name(ConditionStatus status);

struct ConditionVerdict {
  ConditionStatus status = ConditionStatus::Unknown;
  std::string reason;  // witness for Violated, justification otherwise
};

enum class OverallVerdict { TheoremApplies, NotApplicable, Inconclusive };

const char* overall_verdict_name(OverallVerdict verdict);

struct TheoremInput {
  Arrangement arrangement;
  FiniteMatrixGroup group;
  FieldDescriptor field;
  std::size_t connectivity_n = 2;  // H^i(X) = 0 for 1 <= i <= n, n >= 2
  bool apply_remark3_reduction = false;
  BlowUpChoice blowup_choice = BlowUpChoice::Equivariant;
};

struct HypothesisReport {
  ConditionVerdict condition_a;
  ConditionVerdict condition_b;
  ConditionVerdict condition_c;
  ConditionVerdict condition_d;
  ConditionVerdict condition_e;
  OverallVerdict overall = OverallVerdict::Inconclusive;
  std::string verdict_text;

  std::size_t reduced_member_count = 0;
  std::size_t maximal_codim = 0;           // common codim c when defined
  bool reduction_applied = false;
  std::string blowup_choice_used;          // "equivariant", "auto", or "none"
  std::size_t blowup_copies = 0;

  const ConditionVerdict& condition(char which) const;
};

// Subarrangement generated by the maximal members of minimal codimension.
Arrangement reduce_min_codim(const Arrangement& a);

// True iff for every non-identity g the fixed subspace of g inside the
// ambient lies in some member; exact, since a linear subspace lies in a
// finite union of subspaces iff it lies in one of them.
bool check_free_on_complement(const Arrangement& a, const FiniteMatrixGroup& g);

// Decides the five hypotheses of the nonexistence theorem for G-maps into
// the arrangement complement. (A), (B), (E) are exact; (C) and (D) go
// through the sufficient conditions available at this level and report
// Unknown otherwise.
HypothesisReport check_theorem1(const TheoremInput& input);

}  // namespace arrlab
