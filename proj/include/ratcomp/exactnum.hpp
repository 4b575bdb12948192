// Exact scalars: arbitrary-precision rationals and elements of Q(sqrt m).
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ratcomp {

struct ZeroDivisionError : std::domain_error {
  using std::domain_error::domain_error;
};

struct FieldMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class ArithOp { add, sub, mul, div };

class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpz_class& num, const mpz_class& den = 1);
  explicit Rational(mpq_class q);

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational inverse() const;
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  // Integer power; negative exponents invert.
  Rational pow(long e) const;
  // True iff this is the square of a rational.
  bool is_square() const;
  // Exact rational square root when is_square().
  std::optional<Rational> sqrt() const;
  long to_long() const;  // requires is_integer() and fits

  std::string str() const;
  static Rational parse(std::string_view s);
  std::size_t hash() const;

 private:
  mpq_class q_;
};

Rational rat_arith(const Rational& lhs, const Rational& rhs, ArithOp op);

std::ostream& operator<<(std::ostream& os, const Rational& r);

// a + b*sqrt(m). A missing radicand marks an element of Q that mixes freely with any Q(sqrt m).
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b, Rational m);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const std::optional<Rational>& radicand() const { return m_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  Rational norm() const;
  QuadExt conjugate() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  // Throws FieldMismatchError when both radicands are set and differ.
  friend bool operator==(const QuadExt& x, const QuadExt& y);

  QuadExt inverse() const;
  QuadExt pow(long e) const;

  std::string str() const;
  static QuadExt parse(std::string_view s);
  std::size_t hash() const;

 private:
  void join(const QuadExt& o);

  Rational a_, b_;
  std::optional<Rational> m_;
};

QuadExt quad_arith(const QuadExt& lhs, const QuadExt& rhs, ArithOp op);
QuadExt embed_rational(const Rational& x, const Rational& m);

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

}  // namespace ratcomp
