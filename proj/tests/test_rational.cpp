#include <doctest.h>

#include <random>

#include "omni/rational.hpp"

using omni::Rational;

TEST_CASE("rationals normalize to lowest terms with a positive denominator") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(-6, 4).den() == 2);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(19, 4) - Rational(8) == Rational(-13, 4));
  CHECK(Rational(-13, 4) + Rational(21, 4) == Rational(2));
  CHECK(Rational(3, 10) * Rational(5, 9) == Rational(1, 6));
  CHECK(Rational(11, 2) / Rational(2) == Rational(11, 4));
  CHECK(-Rational(7, 4) == Rational(-7, 4));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("comparison is exact cross multiplication") {
  CHECK(Rational(19, 4) < Rational(11, 2));
  CHECK(Rational(11, 2) <= Rational(22, 4));
  CHECK(Rational(-1, 4) > Rational(-13, 4));
  CHECK(Rational(1, 3) != Rational(333333333, 1000000000));
}

TEST_CASE("ceil is the exact integer ceiling") {
  CHECK(Rational(11, 2).ceil() == 6);
  CHECK(Rational(6).ceil() == 6);
  CHECK(Rational(-3, 2).ceil() == -1);
  CHECK(Rational(0).ceil() == 0);
  CHECK(Rational(1, 100).ceil() == 1);
}

TEST_CASE("parse and str round-trip") {
  CHECK(Rational::parse("11/2") == Rational(11, 2));
  CHECK(Rational::parse("-13/4") == Rational(-13, 4));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("0.5") == Rational(1, 2));
  CHECK(Rational::parse("3.3") == Rational(33, 10));
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational(11, 2).str() == "11/2");
  CHECK(Rational(-6).str() == "-6");
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/両"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("nope"), std::invalid_argument);
}

TEST_CASE("overflow is detected, never wrapped") {
  const Rational huge(0x4000000000000000LL);
  CHECK_THROWS_AS(huge * Rational(4), std::overflow_error);
  CHECK_THROWS_AS(huge + huge, std::overflow_error);
  // reduction can rescue large intermediates
  CHECK(Rational(1, 0x4000000000000000LL) * Rational(0x4000000000000000LL) == Rational(1));
}

TEST_CASE("add/subtract round-trips exactly on random small fractions") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto draw = [&] {
      const long long num = static_cast<long long>(rng() % 2001) - 1000;
      const long long den = 1 + static_cast<long long>(rng() % 60);
      return Rational(num, den);
    };
    const Rational a = draw();
    const Rational b = draw();
    CHECK((a + b) - b == a);
    CHECK((a * b).den() > 0);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}
