// Dense univariate polynomials, rational functions in lowest terms and factored forms.
#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ratcomp/exactnum.hpp"

namespace ratcomp {

namespace detail {

struct CoeffText {
  bool negative;
  std::string body;  // magnitude when the scalar has a sign, otherwise the full scalar
  bool unit;         // body is "1"
};

inline CoeffText coeff_text(const Rational& c) {
  Rational a = c.abs();
  return {c.sign() < 0, a.str(), a.is_one()};
}

inline CoeffText coeff_text(const QuadExt& c) {
  if (c.is_rational()) return coeff_text(c.a());
  return {false, "(" + c.str() + ")", false};
}

}  // namespace detail

template <class F>
class Poly {
 public:
  Poly() = default;
  Poly(F c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  Poly(long c) : Poly(F(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly x() { return Poly(std::vector<F>{F(0), F(1)}); }
  // x - root
  static Poly linear(const F& root) { return Poly(std::vector<F>{-root, F(1)}); }
  static Poly monomial(F c, std::size_t k) {
    std::vector<F> v(k + 1, F(0));
    v[k] = std::move(c);
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(0); }
  const F& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
  }

  Poly derivative() const {
    std::vector<F> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * F(static_cast<long>(k)));
    return Poly(std::move(d));
  }

  F eval(const F& v) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
  }

  // this(h(x))
  Poly compose(const Poly& h) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * h + Poly(*it);
    return acc;
  }

  Poly pow(unsigned e) const {
    Poly r(F(1)), b = *this;
    while (e) {
      if (e & 1u) r = r * b;
      e >>= 1u;
      if (e) b = b * b;
    }
    return r;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const F& s) {
    if (s.is_zero()) return Poly();
    Poly r = a;
    for (auto& c : r.c_) c *= s;
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string str(char var = 'x') const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      auto ct = detail::coeff_text(c_[k]);
      if (first) {
        if (ct.negative) out += "-";
      } else {
        out += ct.negative ? " - " : " + ";
      }
      first = false;
      std::string mono;
      if (k >= 1) mono = std::string(1, var) + (k > 1 ? "^" + std::to_string(k) : "");
      if (mono.empty()) {
        out += ct.body;
      } else if (ct.unit) {
        out += mono;
      } else {
        out += ct.body + "*" + mono;
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<F> c_;  // lowest degree first
};

template <class F>
std::pair<Poly<F>, Poly<F>> divrem(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw ZeroDivisionError("polynomial division by zero");
  std::vector<F> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly<F>(), a};
  std::vector<F> q(static_cast<std::size_t>(a.degree() - db + 1), F(0));
  F inv = b.lead().inverse();
  for (int k = a.degree(); k >= db; --k) {
    F c = r[static_cast<std::size_t>(k)] * inv;
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Poly<F>(std::move(q)), Poly<F>(std::move(r))};
}

// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
Poly<F> squarefree_part(const Poly<F>& p) {
  if (p.degree() <= 0) return p;
  return divrem(p, gcd(p, p.derivative())).first;
}

template <class F>
class RationalFunction {
 public:
  RationalFunction() : den_(F(1)) {}
  RationalFunction(Poly<F> n) : num_(std::move(n)), den_(F(1)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(F c) : RationalFunction(Poly<F>(std::move(c))) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(Poly<F>(F(c))) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Poly<F> n, Poly<F> d) : num_(std::move(n)), den_(std::move(d)) { canonicalize(); }

  static RationalFunction x() { return RationalFunction(Poly<F>::x()); }

  const Poly<F>& numer() const { return num_; }
  const Poly<F>& denom() const { return den_; }
  int degree() const { return std::max(num_.degree(), den_.degree()); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RationalFunction operator-() const { return RationalFunction(-num_, den_, raw_tag{}); }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw ZeroDivisionError("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  // Canonical forms are unique, so structural equality is value equality.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction pow(int e) const {
    if (e < 0) return RationalFunction(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)));
    return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), raw_tag{});
  }

  F eval(const F& v) const {
    F d = den_.eval(v);
    if (d.is_zero()) throw ZeroDivisionError("evaluation at a pole");
    return num_.eval(v) / d;
  }

  std::string str() const {
    if (den_.degree() == 0) return num_.str();
    auto wrap = [](const Poly<F>& p) {
      std::string s = p.str();
      return p.coeffs().size() > 1 || s.find(' ') != std::string::npos ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
  }

 private:
  struct raw_tag {};
  RationalFunction(Poly<F> n, Poly<F> d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}

  void canonicalize() {
    if (den_.is_zero()) throw ZeroDivisionError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<F>(F(1));
      return;
    }
    Poly<F> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divrem(num_, g).first;
      den_ = divrem(den_, g).first;
    }
    F lc = den_.lead();
    if (!lc.is_one()) {
      F inv = lc.inverse();
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Poly<F> num_, den_;
};

// g(h(x)) by a homogenised Horner ladder on g's numerator and denominator, reduced once.
template <class F>
RationalFunction<F> compose(const RationalFunction<F>& g, const RationalFunction<F>& h) {
  if (h.is_constant()) throw std::invalid_argument("compose: inner function is constant");
  const Poly<F>& p = h.numer();
  const Poly<F>& q = h.denom();
  int D = g.degree();
  std::vector<Poly<F>> qpow{Poly<F>(F(1))};
  for (int i = 1; i <= D; ++i) qpow.push_back(qpow.back() * q);
  auto ladder = [&](const Poly<F>& P) {
    Poly<F> acc = Poly<F>(P.coeff(static_cast<std::size_t>(D)));
    for (int i = D - 1; i >= 0; --i)
      acc = acc * p + qpow[static_cast<std::size_t>(D - i)] * P.coeff(static_cast<std::size_t>(i));
    return acc;
  };
  return RationalFunction<F>(ladder(g.numer()), ladder(g.denom()));
}

// Cross-multiplication test, independent of canonical form.
template <class F>
bool equal(const RationalFunction<F>& a, const RationalFunction<F>& b) {
  return a.numer() * b.denom() == b.numer() * a.denom();
}

template <class F>
int count_zeros_poles(const RationalFunction<F>& f) {
  if (f.is_zero()) throw std::domain_error("count_zeros_poles of the zero function");
  auto sf = [](const Poly<F>& p) { return p.degree() <= 0 ? 0 : squarefree_part(p).degree(); };
  return sf(f.numer()) + sf(f.denom());
}

template <class F>
class FactoredForm {
 public:
  struct Factor {
    F root;
    int exponent;
  };

  FactoredForm() = default;
  FactoredForm(std::initializer_list<std::pair<F, int>> fs) {
    for (const auto& [r, e] : fs) add(r, e);
  }

  void add(const F& root, int exponent) {
    if (exponent == 0) throw std::invalid_argument("factored form: zero exponent");
    for (const auto& f : fs_)
      if (f.root == root) throw std::invalid_argument("factored form: duplicate root " + root.str());
    fs_.push_back({root, exponent});
  }

  const std::vector<Factor>& factors() const { return fs_; }
  std::size_t size() const { return fs_.size(); }

  RationalFunction<F> expand() const {
    Poly<F> num(F(1)), den(F(1));
    for (const auto& f : fs_) {
      Poly<F> lin = Poly<F>::linear(f.root);
      if (f.exponent > 0)
        num = num * lin.pow(static_cast<unsigned>(f.exponent));
      else
        den = den * lin.pow(static_cast<unsigned>(-f.exponent));
    }
    return RationalFunction<F>(std::move(num), std::move(den));
  }

  std::string str() const {
    std::string out;
    for (const auto& f : fs_) {
      if (!out.empty()) out += "*";
      auto ct = detail::coeff_text(f.root);
      std::string lin;
      if (f.root.is_zero())
        lin = "x";
      else
        lin = "(x " + std::string(ct.negative ? "+ " : "- ") + ct.body + ")";
      out += lin;
      if (f.exponent != 1) out += "^" + (f.exponent < 0 ? "(" + std::to_string(f.exponent) + ")" : std::to_string(f.exponent));
    }
    return out.empty() ? "1" : out;
  }

 private:
  std::vector<Factor> fs_;
};

template <class F>
RationalFunction<F> expand(const FactoredForm<F>& f) {
  return f.expand();
}

// Expression parser: + - * / ^, parentheses, juxtaposition, x, integers; sqrt(r) for QuadExt.
template <class F>
RationalFunction<F> parse_rational_function(std::string_view text);

template <class F>
Poly<F> parse_poly(std::string_view text) {
  auto rf = parse_rational_function<F>(text);
  if (rf.denom().degree() != 0) throw ParseError("expected a polynomial: '" + std::string(text) + "'");
  return rf.numer();
}

extern template class Poly<Rational>;
extern template class Poly<QuadExt>;
extern template class RationalFunction<Rational>;
extern template class RationalFunction<QuadExt>;
extern template RationalFunction<Rational> parse_rational_function<Rational>(std::string_view);
extern template RationalFunction<QuadExt> parse_rational_function<QuadExt>(std::string_view);

using QPoly = Poly<Rational>;
using QRatFun = RationalFunction<Rational>;
using KPoly = Poly<QuadExt>;
using KRatFun = RationalFunction<QuadExt>;

// Change of coefficient field.
inline KPoly to_quad(const QPoly& p) {
  std::vector<QuadExt> v(p.coeffs().begin(), p.coeffs().end());
  return KPoly(std::move(v));
}
inline KRatFun to_quad(const QRatFun& f) { return KRatFun(to_quad(f.numer()), to_quad(f.denom())); }

}  // namespace ratcomp
