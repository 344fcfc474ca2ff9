#include <doctest.h>

#include "arrlab/errors.hpp"
#include "arrlab/group.hpp"
#include "arrlab/instances.hpp"
#include "helpers.hpp"

using namespace arrlab;

TEST_CASE("group generation") {
  CHECK(FiniteMatrixGroup::trivial(3).size() == 1);
  CHECK(FiniteMatrixGroup::generate({cyclic_shift_matrix(5)}).size() == 5);
  // n = 4 shift and reversal generate the order-8 dihedral group
  CHECK(FiniteMatrixGroup::generate(dihedral_generators(4)).size() == 8);
  // cap exceeded reports an error instead of truncating
  CHECK_THROWS_AS(FiniteMatrixGroup::generate({cyclic_shift_matrix(7)}, 3), Error);
  // non-invertible generators are rejected
  CHECK_THROWS_AS(FiniteMatrixGroup::generate({RationalMatrix{{1, 1}, {1, 1}}}), Error);
}

TEST_CASE("action axioms on random subspaces") {
  testutil::Rng rng(23);
  const FiniteMatrixGroup d8 = FiniteMatrixGroup::generate(dihedral_generators(4));
  for (int trial = 0; trial < 15; ++trial) {
    const Subspace s = testutil::random_subspace(rng, 4, 3);
    CHECK(act(d8.element(0), s) == s);  // identity
    for (std::size_t a = 0; a < d8.size(); ++a) {
      for (std::size_t b = 0; b < d8.size(); ++b) {
        const RationalMatrix product = d8.element(a).matrix * d8.element(b).matrix;
        const GroupElement composite{product, inverse(product)};
        CHECK(act(composite, s) == act(d8.element(a), act(d8.element(b), s)));
      }
    }
  }
}

TEST_CASE("fixed subspaces") {
  const std::size_t n = 5;
  const FiniteMatrixGroup z5 = FiniteMatrixGroup::generate({cyclic_shift_matrix(n)});
  const Subspace fixed_full = fixed_subspace(z5, Subspace::full(n));
  CHECK(fixed_full.dim() == 1);
  CHECK(contains(fixed_full, Subspace::from_span(n, RationalMatrix{{1, 1, 1, 1, 1}})));
  // restricted to W_n the fixed space is zero
  CHECK(fixed_subspace(z5, w_n(n)).dim() == 0);
  // trivial group fixes everything
  CHECK(fixed_subspace(FiniteMatrixGroup::trivial(n), w_n(n)) == w_n(n));
  // fixed subspace is fixed by every element
  for (std::size_t e = 0; e < z5.size(); ++e)
    CHECK(act(z5.element(e), fixed_full) == fixed_full);
}

TEST_CASE("orbits") {
  const PaperInstance inst = example_3_2();
  const FiniteMatrixGroup& z5 = inst.group;
  // the seed of the 3.2 arrangement has an orbit of size 5
  CHECK(orbit(z5, inst.arrangement.members()[0]).size() == 5);
  // trivial group gives a singleton orbit
  CHECK(orbit(FiniteMatrixGroup::trivial(5), inst.arrangement.members()[0]).size() == 1);
  // the fixed subspace has a singleton orbit
  const Subspace fixed = fixed_subspace(z5, Subspace::full(5));
  CHECK(orbit(z5, fixed).size() == 1);
}

TEST_CASE("sign eigenforms: trivial group returns the canonical forms") {
  const Subspace s = Subspace::from_forms(3, RationalMatrix{{1, 2, 0}, {0, 0, 1}});
  const RationalMatrix forms = sign_eigenforms(FiniteMatrixGroup::trivial(3), s);
  CHECK(Subspace::from_forms(3, forms) == s);
  CHECK(forms.rows() == 2);
}

TEST_CASE("sign eigenforms: half-turn shift on the block equality subspace") {
  const Ration ration = Ration::parse("1,1,1,1");
  const Subspace l_b = seed_l_b(ration, 2);
  const Subspace ambient = w_n(4);
  RationalMatrix eps = cyclic_shift_matrix(4);
  const FiniteMatrixGroup z2 = FiniteMatrixGroup::generate({eps * eps});
  const RationalMatrix forms = sign_eigenforms(z2, l_b, ambient);
  CHECK(forms.rows() == 2);
  // every returned form maps to +- itself under every element
  for (std::size_t e = 0; e < z2.size(); ++e) {
    for (std::size_t i = 0; i < forms.rows(); ++i) {
      const RationalMatrix image = forms.row(i) * z2.element(e).inverse_matrix;
      CHECK((image == forms.row(i) || image == -forms.row(i)));
    }
  }
  // together with the ambient form they define exactly l_b
  CHECK(Subspace::from_forms(4, stack_rows(ambient.forms(), forms)) == l_b);
}

TEST_CASE("sign eigenforms: antipodal group always realizable") {
  testutil::Rng rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.integer(2, 5));
    const Subspace s = testutil::random_subspace(rng, m, m);
    const FiniteMatrixGroup anti = FiniteMatrixGroup::generate({-RationalMatrix::identity(m)});
    const RationalMatrix forms = sign_eigenforms(anti, s);
    CHECK(forms.rows() == s.codim());
    CHECK(Subspace::from_forms(m, forms) == s);
  }
}

TEST_CASE("sign eigenforms failure modes") {
  // an element moving the subspace violates the precondition
  const FiniteMatrixGroup z3 = FiniteMatrixGroup::generate({cyclic_shift_matrix(3)});
  const Subspace moved = Subspace::from_forms(3, RationalMatrix{{1, 0, 0}});
  CHECK_THROWS_AS(sign_eigenforms(z3, moved), Error);
  // the origin is fixed by the 3-cycle, but the induced action on its form
  // space has eigenvalues of order three, so no +-1 eigenbasis exists over Q
  bool threw = false;
  try {
    sign_eigenforms(z3, Subspace::zero(3));
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::NotRealizable;
  }
  CHECK(threw);
}

TEST_CASE("elementary abelian recognition") {
  CHECK(elementary_abelian_prime(FiniteMatrixGroup::generate({cyclic_shift_matrix(5)})) == 5);
  RationalMatrix eps = cyclic_shift_matrix(4);
  CHECK(elementary_abelian_prime(FiniteMatrixGroup::generate({eps * eps})) == 2);
  CHECK(!elementary_abelian_prime(FiniteMatrixGroup::generate({eps})));  // order 4
  CHECK(!elementary_abelian_prime(FiniteMatrixGroup::generate(dihedral_generators(4))));
  CHECK(!elementary_abelian_prime(FiniteMatrixGroup::trivial(3)));
}
