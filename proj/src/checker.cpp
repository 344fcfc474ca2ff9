#include "arrlab/checker.hpp"

#include <algorithm>
#include <optional>

#include "arrlab/errors.hpp"

namespace arrlab {

const char* condition_status_name(ConditionStatus status) {
  switch (status) {
    case ConditionStatus::Satisfied: return "Satisfied";
    case ConditionStatus::SatisfiedBySufficientCondition:
      return "SatisfiedBySufficientCondition";
    case ConditionStatus::Violated: return "Violated";
    case ConditionStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

const char* overall_verdict_name(OverallVerdict verdict) {
  switch (verdict) {
    case OverallVerdict::TheoremApplies: return "TheoremApplies";
    case OverallVerdict::NotApplicable: return "NotApplicable";
    case OverallVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

const ConditionVerdict& HypothesisReport::condition(char which) const {
  switch (which) {
    case 'A': case 'a': return condition_a;
    case 'B': case 'b': return condition_b;
    case 'C': case 'c': return condition_c;
    case 'D': case 'd': return condition_d;
    default: break;
  }
  return condition_e;
}

Arrangement reduce_min_codim(const Arrangement& a) {
  if (a.size() == 0) fail(ErrorCode::EmptyArrangement, "arrangement has no members");
  const std::vector<std::size_t> maximal = maximal_member_indices(a);
  std::size_t min_codim = a.ambient().dim();
  for (std::size_t i : maximal)
    min_codim = std::min(min_codim, codim_in(a.members()[i], a.ambient()));
  std::vector<Subspace> members;
  std::vector<std::string> names;
  for (std::size_t i : maximal) {
    if (codim_in(a.members()[i], a.ambient()) == min_codim) {
      members.push_back(a.members()[i]);
      names.push_back(a.names()[i]);
    }
  }
  return Arrangement(a.ambient(), std::move(members), std::move(names));
}

bool check_free_on_complement(const Arrangement& a, const FiniteMatrixGroup& g) {
  if (g.ambient_dim() != a.ambient_dim())
    fail(ErrorCode::AmbientMismatch, "group and arrangement dimensions differ");
  for (const GroupElement& e : g.generators()) {
    if (act(e, a.ambient()) != a.ambient())
      fail(ErrorCode::AmbientNotPreserved,
           "a generator does not preserve the ambient subspace");
  }
  const RationalMatrix id = RationalMatrix::identity(g.ambient_dim());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const GroupElement& e = g.element(i);
    if (e.matrix == id) continue;
    const Subspace fixed = Subspace::from_forms(
        g.ambient_dim(), stack_rows(a.ambient().forms(), e.matrix - id));
    bool inside_some_member = false;
    for (const Subspace& member : a.members()) {
      if (contains(member, fixed)) {
        inside_some_member = true;
        break;
      }
    }
    if (!inside_some_member) return false;
  }
  return true;
}

namespace {

struct WitnessPair {
  std::size_t element_index;
  std::size_t member_index;
};

// First (group element, maximal member) pair with g.L != L, in deterministic
// enumeration order.
std::optional<WitnessPair> find_moved_member(const Arrangement& a,
                                             const FiniteMatrixGroup& g,
                                             const std::vector<std::size_t>& maximal) {
  for (std::size_t e = 0; e < g.size(); ++e) {
    for (std::size_t mi : maximal) {
      if (act(g.element(e), a.members()[mi]) != a.members()[mi])
        return WitnessPair{e, mi};
    }
  }
  return std::nullopt;
}

}  // namespace

HypothesisReport check_theorem1(const TheoremInput& input) {
  if (input.connectivity_n < 2)
    fail(ErrorCode::BadParam, "connectivity must be at least 2");
  if (input.arrangement.size() == 0)
    fail(ErrorCode::EmptyArrangement, "arrangement has no members");
  const FiniteMatrixGroup& group = input.group;
  for (const GroupElement& e : group.generators()) {
    if (act(e, input.arrangement.ambient()) != input.arrangement.ambient())
      fail(ErrorCode::AmbientNotPreserved,
           "a generator does not preserve the ambient subspace");
  }

  HypothesisReport report;
  report.reduction_applied = input.apply_remark3_reduction;
  const Arrangement working =
      input.apply_remark3_reduction ? reduce_min_codim(input.arrangement)
                                    : input.arrangement;
  report.reduced_member_count = working.size();
  const std::vector<std::size_t> maximal = maximal_member_indices(working);

  // (A) all maximal codimensions equal c with 2 <= c <= n+1.
  {
    std::vector<std::size_t> codims;
    for (std::size_t i : maximal)
      codims.push_back(codim_in(working.members()[i], working.ambient()));
    const bool mixed = std::adjacent_find(codims.begin(), codims.end(),
                                          std::not_equal_to<>()) != codims.end();
    if (mixed) {
      report.condition_a = {ConditionStatus::Unknown,
                            "maximal members have mixed codimensions; rerun with the "
                            "minimal-codimension reduction"};
    } else {
      const std::size_t c = codims.front();
      report.maximal_codim = c;
      if (c >= 2 && c <= input.connectivity_n + 1) {
        report.condition_a = {ConditionStatus::Satisfied,
                              "all maximal members have codimension " + std::to_string(c)};
      } else {
        report.condition_a = {ConditionStatus::Violated,
                              "common codimension " + std::to_string(c) +
                                  " outside [2, n+1] = [2, " +
                                  std::to_string(input.connectivity_n + 1) + "]"};
      }
    }
  }

  // (B) every group element fixes every maximal member setwise.
  const std::optional<WitnessPair> moved = find_moved_member(working, group, maximal);
  if (moved) {
    report.condition_b = {ConditionStatus::Violated,
                          "element #" + std::to_string(moved->element_index) + " moves member '" +
                              working.names()[moved->member_index] + "'"};
  } else {
    report.condition_b = {ConditionStatus::Satisfied,
                          "every group element fixes every maximal member"};
  }

  // Blow-up used by (C) and (D): equivariant when possible.
  std::optional<BlowUpResult> blowup;
  bool equivariant_forms_ok = false;
  std::string equivariant_failure;
  if (!moved && input.blowup_choice == BlowUpChoice::Equivariant) {
    try {
      BlowUpOptions options;
      options.choice = BlowUpChoice::Equivariant;
      options.group = &group;
      blowup = blow_up(working, options);
      equivariant_forms_ok = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotRealizable) throw;
      equivariant_failure = e.what();
    }
  } else if (moved) {
    equivariant_failure = "condition (B) fails, no equivariant form choice";
  } else {
    equivariant_failure = "equivariant form choice not attempted";
  }
  if (!blowup) {
    BlowUpOptions options;  // plain choice of RREF forms
    blowup = blow_up(working, options);
  }
  report.blowup_choice_used = equivariant_forms_ok ? "equivariant" : "auto";
  std::size_t copies = 0;
  for (const BlowUpBlock& b : blowup->blocks) copies += b.codim;
  report.blowup_copies = copies;

  // (C) trivial action on the blow-up complement cohomology: sufficient when
  // the field has characteristic 2 and signed eigenforms exist, so the group
  // permutes nothing and the signs vanish mod 2.
  if (!input.field.is_rationals() && input.field.p == 2 && equivariant_forms_ok) {
    report.condition_c = {ConditionStatus::SatisfiedBySufficientCondition,
                          "characteristic 2 and every maximal member admits defining forms "
                          "sent to +-themselves by the whole group"};
  } else {
    std::string why;
    if (input.field.is_rationals() || input.field.p != 2)
      why = "field characteristic is not 2";
    else
      why = equivariant_failure;
    report.condition_c = {ConditionStatus::Unknown,
                          "no sufficient condition applies (" + why + ")"};
  }

  // (D) the classifying-space map fails to inject, evaluated on the blow-up.
  if (group.is_trivial()) {
    report.condition_d = {ConditionStatus::Violated,
                          "trivial group: the map from the classifying space is injective"};
  } else {
    const FiniteMatrixGroup product_group = diagonal_product_group(group, copies);
    const bool free_action = check_free_on_complement(blowup->arrangement, product_group);
    const unsigned long order = static_cast<unsigned long>(group.size());
    const bool char_divides_order =
        !input.field.is_rationals() && order % input.field.p == 0;
    if (free_action && char_divides_order) {
      report.condition_d = {ConditionStatus::SatisfiedBySufficientCondition,
                            "the action on the blow-up complement is free and char(field) "
                            "divides the group order"};
    } else {
      const std::optional<unsigned long> p = elementary_abelian_prime(group);
      bool fixed_in_member = false;
      if (p && !input.field.is_rationals() && input.field.p == *p) {
        const Subspace fixed =
            fixed_subspace(product_group, blowup->arrangement.ambient());
        for (const Subspace& member : blowup->arrangement.members()) {
          if (contains(member, fixed)) {
            fixed_in_member = true;
            break;
          }
        }
      }
      if (fixed_in_member) {
        report.condition_d = {ConditionStatus::SatisfiedBySufficientCondition,
                              "elementary abelian p-group with char(field) = p acting "
                              "without fixed points on the blow-up complement"};
      } else {
        report.condition_d = {ConditionStatus::Unknown,
                              "no sufficient condition applies (action not recognized as "
                              "free with char | |G|, nor elementary abelian p matching the "
                              "field)"};
      }
    }
  }

  // (E) every member contains the fixed subspace of the ambient action.
  {
    const Subspace fixed = fixed_subspace(group, working.ambient());
    std::optional<std::size_t> offender;
    for (std::size_t i = 0; i < working.size(); ++i) {
      if (!contains(working.members()[i], fixed)) {
        offender = i;
        break;
      }
    }
    if (offender) {
      report.condition_e = {ConditionStatus::Violated,
                            "member '" + working.names()[*offender] +
                                "' does not contain the fixed subspace"};
    } else {
      report.condition_e = {ConditionStatus::Satisfied,
                            "every member contains the fixed subspace of the ambient"};
    }
  }

  const auto ok = [](const ConditionVerdict& v) {
    return v.status == ConditionStatus::Satisfied ||
           v.status == ConditionStatus::SatisfiedBySufficientCondition;
  };
  const auto violated = [](const ConditionVerdict& v) {
    return v.status == ConditionStatus::Violated;
  };
  if (ok(report.condition_a) && ok(report.condition_b) && ok(report.condition_c) &&
      ok(report.condition_d) && ok(report.condition_e)) {
    report.overall = OverallVerdict::TheoremApplies;
    report.verdict_text =
        "no G-map X -> M_A exists for any G-space X with H^i(X; k) = 0 for 1 <= i <= " +
        std::to_string(input.connectivity_n);
  } else if (violated(report.condition_a) || violated(report.condition_b) ||
             violated(report.condition_c) || violated(report.condition_d) ||
             violated(report.condition_e)) {
    report.overall = OverallVerdict::NotApplicable;
    report.verdict_text = "at least one hypothesis is violated";
  } else {
    report.overall = OverallVerdict::Inconclusive;
    report.verdict_text = "no hypothesis is violated but some could not be decided";
  }
  return report;
}

}  // namespace arrlab
