// Sparse multivariate polynomials over Q in the case variables a_i, b_j, a0, d.
#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ratcomp/exactnum.hpp"

namespace ratcomp {

// dinv stands for 1/d and aux for Rabinowitsch saturation variables; both are internal to the solvers.
enum class VarKind : std::uint8_t { alpha, beta, alpha0, dvar, dinv, aux };

struct VarId {
  VarKind kind = VarKind::alpha;
  std::uint16_t index = 0;

  static VarId alpha(int i) { return {VarKind::alpha, static_cast<std::uint16_t>(i)}; }
  static VarId beta(int j) { return {VarKind::beta, static_cast<std::uint16_t>(j)}; }
  static VarId alpha0() { return {VarKind::alpha0, 0}; }
  static VarId d() { return {VarKind::dvar, 0}; }
  static VarId dinv() { return {VarKind::dinv, 0}; }
  static VarId aux(int k) { return {VarKind::aux, static_cast<std::uint16_t>(k)}; }

  friend bool operator==(const VarId&, const VarId&) = default;
  friend auto operator<=>(const VarId&, const VarId&) = default;

  // a1, b2, a0, d, z, w3
  std::string name() const;
  static VarId parse(std::string_view s);
};

// Exponent vector keyed by variable; zero exponents are never stored.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(VarId v, unsigned e = 1);

  const std::vector<std::pair<VarId, unsigned>>& powers() const { return p_; }
  unsigned degree(VarId v) const;
  unsigned total_degree() const;
  bool is_one() const { return p_.empty(); }
  bool divides(const Monomial& o) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string str() const;

 private:
  std::vector<std::pair<VarId, unsigned>> p_;  // sorted by VarId
};

class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  MultiPoly() = default;
  MultiPoly(Rational c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(VarId v);  // NOLINT(google-explicit-constructor)
  MultiPoly(const Monomial& m, Rational c);

  static MultiPoly var(VarId v) { return MultiPoly(v); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::size_t size() const { return t_.size(); }
  unsigned total_degree() const;
  unsigned degree(VarId v) const;
  std::set<VarId> variables() const;
  bool involves(VarId v) const { return degree(v) > 0; }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly pow(unsigned e) const;
  void add_term(const Monomial& m, const Rational& c);

  // Replace each mapped variable by a polynomial.
  MultiPoly substitute(const std::map<VarId, MultiPoly>& s) const;
  // Coefficients as a polynomial in v: exponent -> coefficient.
  std::map<unsigned, MultiPoly> coefficients_in(VarId v) const;
  // Requires every variable mapped.
  template <class F>
  F evaluate(const std::map<VarId, F>& values) const;

  // Divide by the leading coefficient under the default print order (content normalisation for display).
  MultiPoly primitive() const;

  std::string str() const;
  static MultiPoly parse(std::string_view s);

 private:
  Terms t_;
};

using MPolyOp = ArithOp;
MultiPoly mpoly_arith(const MultiPoly& a, const MultiPoly& b, MPolyOp op);

template <class F>
F MultiPoly::evaluate(const std::map<VarId, F>& values) const {
  F acc(0);
  for (const auto& [m, c] : t_) {
    F term(c);
    for (const auto& [v, e] : m.powers()) {
      auto it = values.find(v);
      if (it == values.end()) throw std::invalid_argument("evaluate: unbound variable " + v.name());
      term *= it->second.pow(static_cast<long>(e));
    }
    acc += term;
  }
  return acc;
}

}  // namespace ratcomp
