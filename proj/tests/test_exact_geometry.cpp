#include <doctest.h>

#include "arrlab/errors.hpp"
#include "arrlab/matrix.hpp"
#include "arrlab/subspace.hpp"
#include "helpers.hpp"

using namespace arrlab;

TEST_CASE("rational construction stays canonical") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(3, -6) == make_rational(-1, 2));
  CHECK(format_rational(make_rational(-4, 8)) == "-1/2");
  CHECK(format_rational(make_rational(7)) == "7");
  CHECK(parse_rational("22/7") == make_rational(22, 7));
  CHECK(parse_rational("-5") == make_rational(-5));
  CHECK(parse_rational("4/-6") == make_rational(-2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("a/b"), Error);
  CHECK_THROWS_AS(make_rational(1, 0), Error);
}

TEST_CASE("rref canonical forms") {
  CHECK(rref(RationalMatrix::identity(2)) == RationalMatrix::identity(2));
  CHECK(rref(RationalMatrix{{2, 4}, {1, 2}}) == RationalMatrix{{1, 2}});
  CHECK(rref(RationalMatrix{{0, 1}, {1, 0}}) == RationalMatrix::identity(2));
  // idempotent
  const RationalMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  CHECK(rref(rref(m)) == rref(m));
  CHECK(rank(m) == 2);
}

TEST_CASE("rref is invariant under invertible row operations") {
  testutil::Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rng.integer(1, 4));
    const std::size_t cols = static_cast<std::size_t>(rng.integer(1, 6));
    const RationalMatrix m = testutil::random_matrix(rng, rows, cols);
    const RationalMatrix r = testutil::random_invertible(rng, rows);
    CHECK(rref(r * m) == rref(m));
  }
}

TEST_CASE("nullspace rows solve the system") {
  testutil::Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rng.integer(1, 4));
    const std::size_t cols = static_cast<std::size_t>(rng.integer(1, 6));
    const RationalMatrix m = testutil::random_matrix(rng, rows, cols);
    const RationalMatrix basis = nullspace_rows(m);
    CHECK(basis.rows() == cols - rank(m));
    const RationalMatrix product = m * basis.transpose();
    CHECK(product.is_zero());
  }
}

TEST_CASE("matrix inverse and modular rank") {
  testutil::Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    const RationalMatrix m = testutil::random_invertible(rng, n);
    CHECK(m * inverse(m) == RationalMatrix::identity(n));
  }
  CHECK_THROWS_AS(inverse(RationalMatrix{{1, 2}, {2, 4}}), Error);
  // 2x2 with determinant 6: invertible over Q and F5, singular mod 2 and 3.
  const RationalMatrix d{{1, 2}, {4, 14}};
  CHECK(rank(d) == 2);
  CHECK(rank_mod_p(d, 2) == 1);
  CHECK(rank_mod_p(d, 3) == 1);
  CHECK(rank_mod_p(d, 5) == 2);
}

TEST_CASE("subspace canonical representation and containment") {
  const Subspace origin = Subspace::zero(2);
  CHECK(origin.dim() == 0);
  CHECK(origin.forms() == RationalMatrix::identity(2));

  const Subspace x_axis = Subspace::from_span(2, RationalMatrix{{1, 0}});
  CHECK(x_axis.dim() == 1);
  CHECK(x_axis.forms() == RationalMatrix{{0, 1}});

  const Subspace hyperplane = Subspace::from_forms(2, RationalMatrix{{1, 0}});
  CHECK(contains(hyperplane, origin));
  CHECK_FALSE(contains(hyperplane, x_axis));
  CHECK(contains(Subspace::full(2), hyperplane));

  // span -> forms -> span round trip preserves the subspace
  const Subspace again = Subspace::from_span(2, x_axis.span_rows());
  CHECK(again == x_axis);
}

TEST_CASE("intersection examples") {
  const Subspace h1 = Subspace::from_forms(2, RationalMatrix{{1, 0}});
  const Subspace h2 = Subspace::from_forms(2, RationalMatrix{{0, 1}});
  CHECK(intersect(h1, h2) == Subspace::zero(2));
  CHECK(intersect(h1, h1) == h1);
  CHECK_THROWS_AS(intersect(h1, Subspace::full(3)), Error);
}

TEST_CASE("codimension examples") {
  const Subspace h = Subspace::from_forms(4, RationalMatrix{{1, 1, 1, 1}});
  CHECK(codim_in(h, Subspace::full(4)) == 1);
  CHECK_THROWS_AS(codim_in(Subspace::full(4), h), Error);
}

TEST_CASE("meet and dimension formula on random subspaces") {
  testutil::Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.integer(2, 6));
    const Subspace s1 = testutil::random_subspace(rng, m, m);
    const Subspace s2 = testutil::random_subspace(rng, m, m);
    const Subspace meet = intersect(s1, s2);
    CHECK(contains(s1, meet));
    CHECK(contains(s2, meet));
    // Any subspace inside both lies inside the meet.
    const Subspace s3 = testutil::random_subspace(rng, m, m);
    if (contains(s1, s3) && contains(s2, s3)) CHECK(contains(meet, s3));
    // dim(s1) + dim(s2) = dim(meet) + dim(join)
    const Subspace join = subspace_sum(s1, s2);
    CHECK(s1.dim() + s2.dim() == meet.dim() + join.dim());
  }
}

TEST_CASE("point membership") {
  const Subspace h = Subspace::from_forms(3, RationalMatrix{{1, 1, 1}});
  CHECK(subspace_contains_point(h, {make_rational(1), make_rational(-2), make_rational(1)}));
  CHECK_FALSE(subspace_contains_point(h, {make_rational(1), make_rational(0), make_rational(1)}));
}
