#include <doctest.h>

#include "hnp/rational.hpp"

using hnp::Rational;

TEST_CASE("normalization to lowest terms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0, 1));
  CHECK(Rational(0, -7).den == 1);
  CHECK(Rational(6, 3).num == 2);
  CHECK(Rational(6, 3).den == 1);
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("exact comparisons") {
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(5, 6) > Rational(4, 5));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(2, 4) >= Rational(1, 2));
}

TEST_CASE("arithmetic stays in lowest terms") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(1, 2).is_integer() == false);
  CHECK(Rational(4, 2).is_integer() == true);
}

TEST_CASE("overflow throws instead of wrapping") {
  const std::int64_t big = std::int64_t{1} << 62;
  CHECK_THROWS_AS(Rational(big, 1) + Rational(big, 1), std::overflow_error);
  CHECK_THROWS_AS(Rational(big, 1) * Rational(3, 1), std::overflow_error);
}
