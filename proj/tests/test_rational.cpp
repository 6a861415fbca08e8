#include "chern/rational.hpp"

#include "chern/prng.hpp"
#include "doctest.h"

using namespace chern;

TEST_CASE("fraction arithmetic identities") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  // the d = -3 case arithmetic, re-derived by hand
  CHECK(Rational(169, 9) - Rational(30, 9) - Rational(1, 9) == Rational(138, 9));
  CHECK(Rational(138, 9) == Rational(46, 3));
  CHECK(Rational(18) * Rational(1, 18) == Rational(1));
}

TEST_CASE("normalization invariants") {
  Rational r(6, -4);
  CHECK(r == Rational(-3, 2));
  CHECK(r.denominator() == 2);
  CHECK(r.numerator() == -3);
  Rational z(0, 7);
  CHECK(z.is_zero());
  CHECK(z.denominator() == 1);
  CHECK(Rational(4, 2).is_integer());
}

TEST_CASE("division by zero is a distinct error") {
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), Error);
  try {
    Rational x = Rational(1) / Rational(0);
    (void)x;
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::division_by_zero);
  }
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("total order is consistent with real values") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5, 2) < Rational(-2));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(2, 4) <= Rational(1, 2));
}

TEST_CASE("parse and print round trip") {
  for (const char* text : {"0", "5", "-17", "5/6", "-46/3", "113562/18"}) {
    auto r = Rational::parse(text);
    REQUIRE(r.has_value());
    auto again = Rational::parse(r->to_string());
    REQUIRE(again.has_value());
    CHECK(*r == *again);
  }
  CHECK_FALSE(Rational::parse("1/0").has_value());
  CHECK_FALSE(Rational::parse("x/2").has_value());
  CHECK_FALSE(Rational::parse("").has_value());
}

TEST_CASE("printing is in lowest terms with positive denominator") {
  CHECK(Rational(113562, 18).to_string() == "6309");
  CHECK(Rational(-4, 8).to_string() == "-1/2");
  CHECK(Rational(0).to_string() == "0");
  CHECK(Rational(46, 3).to_string() == "46/3");
}

TEST_CASE("field axioms on random rationals") {
  Prng rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational a = rng.rational(60, 40), b = rng.rational(60, 40), c = rng.rational(60, 40);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    Rational products[] = {a + b, a - b, a * b};
    for (const Rational& v : products) {
      CHECK(sgn(v.denominator()) > 0);
      CHECK(gcd(abs(v.numerator()), v.denominator()) == 1);
    }
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(3, 2) == 3);
  CHECK(binomial(3, 0) == 1);
  CHECK(binomial(7, 3) == 35);  // the h^3 coefficient of (1+h)^7
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(-1, 2) == 0);
  CHECK(binomial(40, 20) == BigInt("137846528820"));
}
