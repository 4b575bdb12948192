#include <doctest.h>

#include "gen.hpp"
#include "ratcomp/poly.hpp"

using namespace ratcomp;

namespace {
QRatFun Q(const char* s) { return parse_rational_function<Rational>(s); }
QPoly P(const char* s) { return parse_poly<Rational>(s); }
}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("parse and print") {
    CHECK(P("(x-1)*(x+1)") == P("x^2 - 1"));
    CHECK(Q("(x^2-1)/(x-1)") == Q("x+1"));
    CHECK(Q("2x/(4x^2)") == Q("1/(2*x)"));
    CHECK(Q(Q("(x^3+2)/(x^2-3)").str().c_str()) == Q("(x^3+2)/(x^2-3)"));
    CHECK_THROWS_AS(Q("x+"), ParseError);
    CHECK_THROWS_AS(Q("1/(x-x)"), ZeroDivisionError);
  }

  TEST_CASE("composition") {
    CHECK(compose(Q("x^2"), Q("x+1")) == Q("x^2+2x+1"));
    CHECK(compose(Q("(x^2+4*x)/(x+1)"), Q("(x^2-2*x)/(x+1)")) == Q("(x^4-8*x)/(x^3+1)"));
    CHECK(compose(Q("1/x"), Q("1/x")) == Q("x"));
    CHECK_THROWS(compose(Q("x^2"), Q("3")));
  }

  TEST_CASE("composition is associative") {
    gen::Gen g(303);
    int done = 0;
    while (done < 60) {
      auto a = g.qratfun(2), b = g.qratfun(2), c = g.qratfun(2);
      if (b.is_constant() || c.is_constant()) continue;
      CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
      ++done;
    }
  }

  TEST_CASE("gcd") {
    CHECK(gcd(P("x^2-1"), P("x^2+2x+1")) == P("x+1"));
    CHECK(gcd(P("2x-4"), P("0")) == P("x-2"));
    CHECK(gcd(QPoly(), QPoly()).is_zero());
    gen::Gen g(404);
    for (int i = 0; i < 200; ++i) {
      auto a = g.qpoly(3), b = g.qpoly(3), c = g.qpoly(2);
      if (c.is_zero()) continue;
      auto d = gcd(a * c, b * c);
      CHECK(divrem(a * c, d).second.is_zero());
      CHECK(divrem(d, c.monic()).second.is_zero());
    }
  }

  TEST_CASE("counting zeros and poles") {
    CHECK(count_zeros_poles(Q("x^3*(x-1)^2/(x+2)")) == 3);
    CHECK(count_zeros_poles(Q("(x^2+1)/x")) == 3);
    CHECK(count_zeros_poles(Q("5")) == 0);
    CHECK_THROWS(count_zeros_poles(Q("0")));
  }

  TEST_CASE("factored forms") {
    FactoredForm<Rational> f{{Rational(0), 2}, {Rational(1), -1}, {Rational(1, 2), 3}};
    CHECK(f.expand() == Q("x^2*(x-1/2)^3/(x-1)"));
    CHECK(count_zeros_poles(f.expand()) == 3);
    CHECK_THROWS(f.add(Rational(1), 2));
    CHECK_THROWS(f.add(Rational(5), 0));
    FactoredForm<QuadExt> k{{QuadExt(0, 1, 2), 1}, {QuadExt(0, -1, 2), 1}};
    CHECK(k.expand() == to_quad(Q("x^2-2")));
  }
}
