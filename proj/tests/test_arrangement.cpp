#include <doctest.h>

#include "arrlab/arrangement.hpp"
#include "arrlab/errors.hpp"
#include "arrlab/instances.hpp"
#include "helpers.hpp"

using namespace arrlab;

namespace {

Arrangement two_transverse_lines() {
  return Arrangement::in_full_space(
      2, {Subspace::from_forms(2, RationalMatrix{{1, 0}}),
          Subspace::from_forms(2, RationalMatrix{{0, 1}})});
}

}  // namespace

TEST_CASE("arrangement construction invariants") {
  // duplicates collapse, the ambient itself is rejected
  const Subspace h = Subspace::from_forms(2, RationalMatrix{{1, 0}});
  const Arrangement a = Arrangement::in_full_space(2, {h, h});
  CHECK(a.size() == 1);
  CHECK_THROWS_AS(Arrangement(Subspace::full(2), {Subspace::full(2)}), Error);
  // members must lie inside the ambient
  CHECK_THROWS_AS(Arrangement(w_n(3), {Subspace::from_forms(3, RationalMatrix{{1, 0, 0}})}),
                  Error);
}

TEST_CASE("maximal members") {
  const Subspace h = Subspace::from_forms(2, RationalMatrix{{1, 0}});
  CHECK(maximal_members(Arrangement::in_full_space(2, {h})) ==
        std::vector<Subspace>{h});
  // a line inside a hyperplane is dominated
  const Arrangement nested =
      Arrangement::in_full_space(2, {Subspace::zero(2), h});
  CHECK(maximal_members(nested) == std::vector<Subspace>{h});
  // the 3.2 orbit is an antichain of five
  CHECK(maximal_members(example_3_2().arrangement).size() == 5);
}

TEST_CASE("arrangement codimension fixtures") {
  const Subspace h = Subspace::from_forms(5, RationalMatrix{{1, 2, 3, 4, 5}});
  CHECK(arrangement_codim(Arrangement::in_full_space(5, {h})) == 1);
  CHECK(arrangement_codim(example_3_1(3).arrangement) == 3);
  CHECK(arrangement_codim(example_3_2().arrangement) == 3);
  CHECK(arrangement_codim(test_arrangement_b(Ration::parse("1,1,1,1"), 2).arrangement) == 2);
  CHECK_THROWS_AS(arrangement_codim(Arrangement::in_full_space(2, {})), Error);
}

TEST_CASE("c-arrangement checks") {
  const Subspace s = Subspace::from_forms(4, RationalMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(is_c_arrangement(Arrangement::in_full_space(4, {s}), 2));
  CHECK_FALSE(is_c_arrangement(Arrangement::in_full_space(4, {s}), 3));
  CHECK(is_c_arrangement(two_transverse_lines(), 1));
  // the blow-up of the 3.2 arrangement is a 3-arrangement
  const BlowUpResult blown = blow_up(example_3_2().arrangement);
  CHECK(is_c_arrangement(blown.arrangement, 3));
}

TEST_CASE("group closure and invariance") {
  const PaperInstance inst = example_3_2();
  // closure is idempotent on an invariant arrangement
  const Arrangement again = g_closure(inst.group, inst.arrangement);
  CHECK(again.size() == inst.arrangement.size());
  CHECK(is_g_invariant(inst.group, inst.arrangement));
  // closure under the trivial group changes nothing
  const Arrangement trivial_closure =
      g_closure(FiniteMatrixGroup::trivial(5), inst.arrangement);
  CHECK(trivial_closure.size() == 5);
  // a single seed blows out to its orbit
  const Arrangement seed(inst.arrangement.ambient(), {inst.arrangement.members()[0]});
  CHECK(g_closure(inst.group, seed).size() == 5);
  CHECK_FALSE(is_g_invariant(inst.group, seed));
}

TEST_CASE("condition (E) fixtures") {
  const PaperInstance inst = example_3_2();
  CHECK(check_condition_E(inst.arrangement, inst.group));
  // with the trivial group the fixed space is the whole ambient
  CHECK_FALSE(check_condition_E(inst.arrangement, FiniteMatrixGroup::trivial(5)));
  // 4.4 bullet: the full dihedral group satisfies (E) on arrangement B
  const PaperInstance b = test_arrangement_b(Ration::parse("1,1,1,1"), 2);
  RationalMatrix eps = cyclic_shift_matrix(4);
  const FiniteMatrixGroup z2 = FiniteMatrixGroup::generate({eps * eps});
  CHECK(check_condition_E(b.arrangement, z2));
}

TEST_CASE("blow-up of the origin in the plane") {
  const BlowUpResult result = blow_up(example_12().arrangement);
  CHECK(result.arrangement.ambient_dim() == 4);
  CHECK(result.arrangement.size() == 1);
  CHECK(result.blocks.size() == 1);
  CHECK(result.blocks[0].codim == 2);
  // forms are exactly x1 and x4
  CHECK(result.arrangement.members()[0].forms() ==
        RationalMatrix{{1, 0, 0, 0}, {0, 0, 0, 1}});
  // codimension is preserved
  CHECK(arrangement_codim(result.arrangement) == 2);
}

TEST_CASE("blow-up of a single hyperplane is the same arrangement") {
  const Subspace h = Subspace::from_forms(3, RationalMatrix{{1, 2, 3}});
  const BlowUpResult result = blow_up(Arrangement::in_full_space(3, {h}));
  CHECK(result.arrangement.ambient_dim() == 3);
  CHECK(result.arrangement.members()[0] == h);
}

TEST_CASE("blow-up ignores non-maximal members with a warning") {
  const Subspace h = Subspace::from_forms(2, RationalMatrix{{1, 0}});
  const Arrangement nested = Arrangement::in_full_space(2, {Subspace::zero(2), h});
  const BlowUpResult result = blow_up(nested);
  CHECK(result.arrangement.size() == 1);
  CHECK(result.warnings.size() == 1);
}

TEST_CASE("blow-up preserves arrangement codimension on random inputs") {
  testutil::Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.integer(2, 5));
    const std::size_t count = static_cast<std::size_t>(rng.integer(1, 3));
    std::vector<Subspace> members;
    for (std::size_t i = 0; i < count; ++i)
      members.push_back(testutil::random_subspace(rng, m, m - 1));
    const Arrangement a = Arrangement::in_full_space(m, std::move(members));
    const BlowUpResult result = blow_up(a);
    CHECK(arrangement_codim(result.arrangement) == arrangement_codim(a));
  }
}

TEST_CASE("blow-up of equal-codimension arrangements is a c-arrangement") {
  testutil::Rng rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.integer(3, 5));
    const std::size_t k = static_cast<std::size_t>(rng.integer(1, static_cast<long>(m) - 1));
    std::vector<Subspace> members;
    const std::size_t count = static_cast<std::size_t>(rng.integer(1, 3));
    for (std::size_t i = 0; i < count; ++i) {
      for (;;) {
        RationalMatrix forms = testutil::random_matrix(rng, k, m);
        Subspace s = Subspace::from_forms(m, forms);
        if (s.codim() == k) {
          members.push_back(std::move(s));
          break;
        }
      }
    }
    const Arrangement a = Arrangement::in_full_space(m, std::move(members));
    if (maximal_members(a).size() != a.size()) continue;  // want an antichain
    const BlowUpResult result = blow_up(a);
    CHECK(is_c_arrangement(result.arrangement, k));
  }
}

TEST_CASE("condition (E) survives the blow-up") {
  testutil::Rng rng(41);
  int tested = 0;
  for (int trial = 0; trial < 60 && tested < 12; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.integer(2, 4));
    const FiniteMatrixGroup anti =
        FiniteMatrixGroup::generate({-RationalMatrix::identity(m)});
    const Arrangement a = g_closure(
        anti, Arrangement::in_full_space(m, {testutil::random_subspace(rng, m, m)}));
    if (!check_condition_E(a, anti)) continue;
    ++tested;
    const BlowUpResult result = blow_up(a);
    std::size_t copies = 0;
    for (const BlowUpBlock& b : result.blocks) copies += b.codim;
    const FiniteMatrixGroup product = diagonal_product_group(anti, copies);
    CHECK(check_condition_E(result.arrangement, product));
  }
  CHECK(tested > 0);
}

TEST_CASE("equivariant blow-up is invariant under the diagonal action") {
  // 4.4 setting: arrangement B with the half-turn subgroup
  const PaperInstance b = test_arrangement_b(Ration::parse("1,1,1,1"), 2);
  RationalMatrix eps = cyclic_shift_matrix(4);
  const FiniteMatrixGroup z2 = FiniteMatrixGroup::generate({eps * eps});
  BlowUpOptions options;
  options.choice = BlowUpChoice::Equivariant;
  options.group = &z2;
  const BlowUpResult result = blow_up(b.arrangement, options);
  std::size_t copies = 0;
  for (const BlowUpBlock& blk : result.blocks) copies += blk.codim;
  const FiniteMatrixGroup product = diagonal_product_group(z2, copies);
  CHECK(is_g_invariant(product, result.arrangement));
  for (std::size_t e = 0; e < product.size(); ++e)
    for (const Subspace& member : result.arrangement.members())
      CHECK(act(product.element(e), member) == member);
}

TEST_CASE("explicit blow-up forms are validated") {
  const Arrangement a = example_12().arrangement;
  BlowUpOptions options;
  options.choice = BlowUpChoice::Explicit;
  options.explicit_forms = {RationalMatrix{{1, 0}, {0, 1}}};
  CHECK(blow_up(a, options).arrangement.size() == 1);
  options.explicit_forms = {RationalMatrix{{1, 0}, {2, 0}}};  // dependent
  CHECK_THROWS_AS(blow_up(a, options), Error);
  options.explicit_forms = {RationalMatrix{{1, 0}}};  // wrong count
  CHECK_THROWS_AS(blow_up(a, options), Error);
}

TEST_CASE("diagonal embedding lands in the blow-up complement") {
  CHECK(diagonal_embed(std::vector<Rational>{make_rational(1), make_rational(2)}, 2) ==
        std::vector<Rational>{make_rational(1), make_rational(2), make_rational(1),
                              make_rational(2)});
  testutil::Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.integer(2, 4));
    std::vector<Subspace> members;
    const std::size_t count = static_cast<std::size_t>(rng.integer(1, 3));
    for (std::size_t i = 0; i < count; ++i)
      members.push_back(testutil::random_subspace(rng, m, m));
    const Arrangement a = Arrangement::in_full_space(m, std::move(members));
    const BlowUpResult result = blow_up(a);
    std::size_t copies = 0;
    for (const BlowUpBlock& b : result.blocks) copies += b.codim;
    // points of the complement embed into the blow-up complement
    for (int pt = 0; pt < 100; ++pt) {
      std::vector<Rational> x;
      for (std::size_t j = 0; j < m; ++j)
        x.push_back(make_rational(rng.integer(-9, 9), rng.integer(1, 3)));
      bool in_complement = true;
      for (const Subspace& member : a.members())
        if (subspace_contains_point(member, x)) in_complement = false;
      if (!in_complement) continue;
      const std::vector<Rational> embedded = diagonal_embed(x, copies);
      for (const Subspace& member : result.arrangement.members())
        CHECK_FALSE(subspace_contains_point(member, embedded));
    }
  }
}
