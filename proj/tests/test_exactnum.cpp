#include <doctest.h>

#include "gen.hpp"
#include "ratcomp/exactnum.hpp"

using namespace ratcomp;

TEST_SUITE("exactnum") {
  TEST_CASE("rational basics") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational::parse("-12/8").str() == "-3/2");
    CHECK(Rational::parse("7").str() == "7");
    CHECK_THROWS_AS(Rational(1, 0), ZeroDivisionError);
    CHECK_THROWS_AS(Rational(0).inverse(), ZeroDivisionError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  }

  TEST_CASE("big values stay exact") {
    Rational r(1);
    for (int i = 0; i < 40; ++i) r = r * Rational(1000003, 7);
    for (int i = 0; i < 40; ++i) r = r / Rational(1000003, 7);
    CHECK(r.is_one());
  }

  TEST_CASE("rational field axioms") {
    gen::Gen g(101);
    for (int i = 0; i < 1000; ++i) {
      Rational a = g.rational(), b = g.rational(), c = g.rational();
      CHECK(a + b == b + a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a - a == Rational(0));
      if (!a.is_zero()) CHECK(a / a == Rational(1));
      CHECK(Rational::parse(a.str()) == a);
    }
  }

  TEST_CASE("quadratic extension arithmetic") {
    QuadExt s(0, 1, 2);  // sqrt 2
    CHECK(s * s == QuadExt(2));
    CHECK((QuadExt(1) + s).inverse() == QuadExt(-1) + s);
    CHECK(QuadExt(3, 2, 5).norm() == Rational(9 - 20));
    CHECK(QuadExt::parse("1/2 - 3*sqrt(-2)") == QuadExt(Rational(1, 2), -3, -2));
    CHECK_THROWS_AS(QuadExt(1, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(QuadExt::parse("1 + 2*sqrt(9)"), ParseError);
    CHECK_THROWS_AS(QuadExt(0, 1, 2) + QuadExt(0, 1, 3), FieldMismatchError);
    CHECK_THROWS_AS(QuadExt(0).inverse(), ZeroDivisionError);
    // A rational element mixes with either field.
    CHECK(QuadExt(2) * QuadExt(0, 1, 3) == QuadExt(0, 2, 3));
  }

  TEST_CASE("quadratic extension axioms and norm") {
    gen::Gen g(202);
    for (Rational m : {Rational(2), Rational(-1), Rational(-7, 3)}) {
      for (int i = 0; i < 1000; ++i) {
        QuadExt x = g.quad(m), y = g.quad(m), z = g.quad(m);
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y).norm() == x.norm() * y.norm());
        if (!x.is_zero()) CHECK(x * x.inverse() == QuadExt(1));
        CHECK(QuadExt::parse(x.str()) == x);
      }
    }
  }
}
