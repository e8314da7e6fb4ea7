#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "perioddomain/rational.hpp"
#include "perioddomain/scalar.hpp"

using namespace perioddomain;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK((Rational(1, 6) + Rational(1, 3)) == Rational(1, 2));
  CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
  CHECK((Rational(1, 2) / Rational(1, 4)) == Rational(2));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(-4).str() == "-4");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(7, 3).sign() == 1);
  CHECK(Rational(0, 5).is_zero());
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("overflow is detected, not wrapped") {
  Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, arithmetic_overflow);
}

TEST_CASE("scalar radical arithmetic is exact") {
  Scalar r2 = Scalar::sqrt_of(Rational(2));
  Scalar r3 = Scalar::sqrt_of(Rational(3));
  CHECK((r2 * r2) == Scalar(2));
  CHECK((r2 * r3) == Scalar::sqrt_of(Rational(6)));
  // sqrt(8) collapses to 2 sqrt(2)
  CHECK(Scalar::sqrt_of(Rational(8)) == Scalar(2) * r2);
  // sqrt(1/6) = sqrt(6)/6
  CHECK(Scalar::sqrt_of(Rational(1, 6)) * Scalar(6) == Scalar::sqrt_of(Rational(6)));
  CHECK((r2 + r3 - r2) == r3);
  CHECK((r2 - r2).is_zero());
  CHECK(!(r2 + r3).is_rational());
  CHECK((r2 * r2).is_rational());
  CHECK((r2 * r2).to_rational() == Rational(2));
}

TEST_CASE("scalar conjugation and norms") {
  Scalar z = Scalar::gaussian(Rational(1, 2), Rational(-3));
  CHECK(z.conj() == Scalar::gaussian(Rational(1, 2), Rational(3)));
  CHECK(z.abs2() == Scalar(Rational(1, 4) + Rational(9)));
  Scalar w = Scalar::gaussian(Rational(1), Rational(1)) * Scalar::sqrt_of(Rational(2));
  CHECK(w.abs2() == Scalar(4));  // |1+i|^2 * 2
  CHECK(w.abs2().is_real());
}

TEST_CASE("scalar serialization matches the exact-string format") {
  CHECK(Scalar(Rational(3, 2)).str() == "3/2");
  CHECK((Scalar(Rational(1, 2)) * Scalar::sqrt_of(Rational(6))).str() == "1/2·√6");
  CHECK(Scalar().str() == "0");
  CHECK(Scalar::imaginary_unit().str() == "i");
  CHECK(Scalar::sqrt_of(Rational(5)).str() == "√5");
}
