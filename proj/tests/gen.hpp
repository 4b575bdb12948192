// Seeded generators for the property tests.
#pragma once

#include <random>

#include "ratcomp/poly.hpp"

namespace gen {

using ratcomp::QuadExt;
using ratcomp::Rational;

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

  Rational rational(long span = 12, long maxden = 9) { return Rational(integer(-span, span), integer(1, maxden)); }

  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (!r.is_zero()) return r;
    }
  }

  QuadExt quad(const Rational& m) { return QuadExt(rational(), rational(), m); }

  ratcomp::QPoly qpoly(int maxdeg) {
    std::vector<Rational> c;
    for (int k = integer(0, maxdeg); k >= 0; --k) c.push_back(rational(6, 4));
    return ratcomp::QPoly(c);
  }

  ratcomp::QRatFun qratfun(int maxdeg) {
    for (;;) {
      auto d = qpoly(maxdeg);
      if (!d.is_zero()) return ratcomp::QRatFun(qpoly(maxdeg), d);
    }
  }
};

}  // namespace gen
