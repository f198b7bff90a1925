#include <doctest.h>

#include <cmath>

#include "cardfair/bounds.hpp"
#include "cardfair/errors.hpp"

using namespace cardfair;

TEST_CASE("single-category parameter derivation") {
  const auto p = SingleCatBoundParams::compute(4, 1);
  CHECK(p.s == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.t == 1);
  REQUIRE(p.c.has_value());
  CHECK(*p.c == 2);

  // m = k(c^2 - 1) + 1 with k = 2, c = 3
  const auto q = SingleCatBoundParams::compute(17, 2);
  REQUIRE(q.c.has_value());
  CHECK(*q.c == 3);
  CHECK(q.t == 2);  // s = -1 + 3 = 2

  const auto r = SingleCatBoundParams::compute(50, 7);
  CHECK_FALSE(r.c.has_value());
  CHECK(r.t == 1);  // s = -1 + sqrt(8), floor exactly 1

  // floor(s) right at a perfect-square boundary must be exact
  const auto edge = SingleCatBoundParams::compute(9, 1);  // s = 2 exactly
  CHECK(edge.t == 2);
  const auto below = SingleCatBoundParams::compute(8, 1);  // s just under 2
  CHECK(below.t == 1);
}

TEST_CASE("poc_usw_single") {
  CHECK(poc_usw_single(4, 1) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(poc_usw_single(2, 2) == 1.0);  // m <= k
  CHECK(poc_usw_single(1, 1) == 1.0);
  CHECK(poc_usw_single(50, 7) ==
        doctest::Approx((1.0 + std::sqrt(8.0)) / 2.0).epsilon(1e-12));
  CHECK_THROWS_AS(poc_usw_single(0, 1), DomainError);
  CHECK_THROWS_AS(poc_usw_single(4, 0), DomainError);
}

TEST_CASE("poc_usw_single_lower_achieved") {
  CHECK(poc_usw_single_lower_achieved_exact(4, 1) == Rational(3, 2));
  CHECK(poc_usw_single_lower_achieved_exact(2, 1) == 1);  // m - 1 = k
  // t = 1, floor(49/1) = 49: (1+1)/(1 + 7/49) = 7/4
  CHECK(poc_usw_single_lower_achieved_exact(50, 7) == Rational(7, 4));
  CHECK(poc_usw_single_lower_achieved(50, 7) == doctest::Approx(1.75));

  // the achieved ratio never exceeds the upper bound
  for (int m = 3; m <= 40; ++m)
    for (int k = 1; k <= m - 2; ++k)
      CHECK(poc_usw_single_lower_achieved(m, k) <=
            poc_usw_single(m, k) + kSqrtTolerance);

  // at divisible parameters the two coincide
  for (int c = 2; c <= 5; ++c)
    for (int k = 1; k <= 3; ++k) {
      const int m = k * (c * c - 1) + 1;
      CHECK(poc_usw_single_lower_achieved(m, k) ==
            doctest::Approx(poc_usw_single(m, k)).epsilon(1e-9));
    }
}

TEST_CASE("poc_esw_single") {
  CHECK(poc_esw_single(4, 2, 2) == Rational(3, 2));
  CHECK(poc_esw_single(6, 2, 3) == Rational(5, 3));
  CHECK(poc_esw_single(10, 4, 3) == Rational(7, 3));
  CHECK(poc_esw_single(2, 4, 1) == 1);  // m < n: max with 1
  CHECK_THROWS_AS(poc_esw_single(4, 0, 2), DomainError);
}

TEST_CASE("poc_usw_two") {
  CHECK(poc_usw_two({{2, 1}, {2, 1}}) == 2);
  CHECK(poc_usw_two({{4, 2}, {3, 2}}) == Rational(12, 7));
  CHECK(poc_usw_two({{4, 2}, {4, 3}}) == Rational(8, 5));

  // preconditions: at least two categories, canonical order, 2k >= m
  CHECK_THROWS_AS(poc_usw_two({{2, 1}}), DomainError);
  CHECK_THROWS_AS(poc_usw_two({{3, 2}, {4, 2}}), DomainError);  // wrong order
  CHECK_THROWS_AS(poc_usw_two({{5, 2}, {2, 2}}), FeasibilityError);  // 2k1 < m1
}

TEST_CASE("poc_usw_multi") {
  CHECK(poc_usw_multi({{2, 1}, {2, 1}, {2, 1}}) == 2);
  CHECK(poc_usw_multi({{6, 2}, {3, 1}}) == 3);
  CHECK_THROWS_AS(poc_usw_multi({}), DomainError);
  CHECK_THROWS_AS(poc_usw_multi({{4, 2}, {4, 1}}), DomainError);  // wrong order
}

TEST_CASE("poc_esw_multi") {
  // n small enough: m1/k1 regime
  CHECK(poc_esw_multi(3, {{3, 1}, {2, 1}}) == 3);
  // large n: max_j (m_j - c_j)/k_j regime
  CHECK(poc_esw_multi(3, {{4, 2}, {1, 1}}) == Rational(3, 2));

  const auto params = MultiCatBoundParams::compute(3, {{4, 2}, {1, 1}});
  REQUIRE(params.c_values.size() == 2);
  CHECK(params.c_values[0] == 1);  // n - 1 - m2 = 1
  CHECK(params.c_values[1] == 0);  // n - 1 - m1 < 0

  CHECK_THROWS_AS(poc_esw_multi(0, {{2, 1}, {2, 1}}), DomainError);
  CHECK_THROWS_AS(poc_esw_multi(2, {{2, 2}, {4, 1}}), DomainError);  // order
}
