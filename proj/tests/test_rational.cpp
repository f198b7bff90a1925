#include <doctest.h>

#include <random>

#include "cardfair/errors.hpp"
#include "cardfair/rational.hpp"

using namespace cardfair;

TEST_CASE("rational parsing and formatting") {
  CHECK(rational_to_string(parse_rational("1/3")) == "1/3");
  CHECK(rational_to_string(parse_rational("0/1")) == "0/1");
  CHECK(rational_to_string(parse_rational("0")) == "0/1");
  CHECK(rational_to_string(parse_rational("-2/4")) == "-1/2");
  CHECK(rational_to_string(parse_rational("6/4")) == "3/2");
  CHECK(parse_rational("7") == Rational(7));

  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("1/-2"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), DomainError);
}

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 500; ++it) {
    const Rational a(static_cast<long long>(rng() % 2001) - 1000,
                     static_cast<long long>(rng() % 40) + 1);
    const Rational b(static_cast<long long>(rng() % 2001) - 1000,
                     static_cast<long long>(rng() % 40) + 1);
    CHECK((a + b) - b == a);
    if (a != 0) CHECK(a * (Rational(1) / a) == 1);
  }
  // no rounding on repeated accumulation
  Rational tenth(1, 10), sum = 0;
  for (int i = 0; i < 10; ++i) sum += tenth;
  CHECK(sum == 1);
}
