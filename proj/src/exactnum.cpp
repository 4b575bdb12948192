#include "ratcomp/exactnum.hpp"

#include <cctype>
#include <climits>
#include <functional>
#include <regex>

namespace ratcomp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_integer(std::string_view s, mpz_class& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw ZeroDivisionError("rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ZeroDivisionError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ZeroDivisionError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw ZeroDivisionError("inverse of zero");
  return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

bool Rational::is_square() const {
  if (sign() < 0) return false;
  return mpz_perfect_square_p(q_.get_num_mpz_t()) && mpz_perfect_square_p(q_.get_den_mpz_t());
}

std::optional<Rational> Rational::sqrt() const {
  if (!is_square()) return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q_.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q_.get_den_mpz_t());
  return Rational(n, d);
}

long Rational::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p())
    throw std::range_error("rational " + str() + " is not a machine integer");
  return q_.get_num().get_si();
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::parse(std::string_view s) {
  s = trim(s);
  auto slash = s.find('/');
  mpz_class n, d = 1;
  if (!parse_integer(trim(s.substr(0, slash)), n))
    throw ParseError("bad rational: '" + std::string(s) + "'");
  if (slash != std::string_view::npos) {
    auto ds = trim(s.substr(slash + 1));
    if (!ds.empty() && (ds[0] == '-' || ds[0] == '+'))
      throw ParseError("bad rational: '" + std::string(s) + "'");
    if (!parse_integer(ds, d)) throw ParseError("bad rational: '" + std::string(s) + "'");
  }
  return Rational(n, d);
}

std::size_t Rational::hash() const {
  std::size_t h1 = std::hash<std::string>{}(q_.get_num().get_str(16));
  std::size_t h2 = std::hash<std::string>{}(q_.get_den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

Rational rat_arith(const Rational& lhs, const Rational& rhs, ArithOp op) {
  switch (op) {
    case ArithOp::add: return lhs + rhs;
    case ArithOp::sub: return lhs - rhs;
    case ArithOp::mul: return lhs * rhs;
    case ArithOp::div: return lhs / rhs;
  }
  throw std::invalid_argument("unknown op");
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// ---- QuadExt ----

QuadExt::QuadExt(Rational a, Rational b, Rational m) : a_(std::move(a)), b_(std::move(b)), m_(std::move(m)) {
  if (m_->is_square()) throw std::invalid_argument("radicand " + m_->str() + " is a rational square");
}

void QuadExt::join(const QuadExt& o) {
  if (!o.m_) return;
  if (!m_) {
    m_ = o.m_;
  } else if (*m_ != *o.m_) {
    throw FieldMismatchError("Q(sqrt " + m_->str() + ") vs Q(sqrt " + o.m_->str() + ")");
  }
}

Rational QuadExt::norm() const {
  if (!m_) return a_ * a_;
  return a_ * a_ - *m_ * b_ * b_;
}

QuadExt QuadExt::conjugate() const {
  QuadExt r = *this;
  r.b_ = -b_;
  return r;
}

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  join(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  join(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  join(o);
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
    return *this;
  }
  Rational na = a_ * o.a_ + *m_ * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw ZeroDivisionError("inverse of zero in quadratic extension");
  Rational n = norm();
  QuadExt r = conjugate();
  r.a_ /= n;
  r.b_ /= n;
  return r;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  join(o);
  return *this *= o.inverse();
}

QuadExt QuadExt::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  QuadExt result(1), base = *this;
  result.m_ = m_;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  if (x.m_ && y.m_ && *x.m_ != *y.m_)
    throw FieldMismatchError("comparison across Q(sqrt " + x.m_->str() + ") and Q(sqrt " + y.m_->str() + ")");
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::string QuadExt::str() const {
  if (!m_) return a_.str();
  std::string s = a_.str();
  s += b_.sign() < 0 ? " - " : " + ";
  s += b_.abs().str() + "*sqrt(" + m_->str() + ")";
  return s;
}

QuadExt QuadExt::parse(std::string_view s) {
  static const std::regex re(
      R"(^\s*(?:([-+]?\d+(?:/\d+)?)\s*([-+])\s*)?(\d+(?:/\d+)?)\*sqrt\(\s*([-+]?\d+(?:/\d+)?)\s*\)\s*$)");
  std::string str(s);
  if (str.find("sqrt") == std::string::npos) return QuadExt(Rational::parse(str));
  std::smatch mt;
  if (!std::regex_match(str, mt, re)) throw ParseError("bad quadratic element: '" + str + "'");
  Rational a = mt[1].matched ? Rational::parse(mt[1].str()) : Rational(0);
  Rational b = Rational::parse(mt[3].str());
  if (mt[2].matched && mt[2].str() == "-") b = -b;
  Rational m = Rational::parse(mt[4].str());
  if (m.is_square()) throw ParseError("radicand is a square: '" + str + "'");
  return QuadExt(a, b, m);
}

std::size_t QuadExt::hash() const { return a_.hash() * 31 + b_.hash(); }

QuadExt quad_arith(const QuadExt& lhs, const QuadExt& rhs, ArithOp op) {
  switch (op) {
    case ArithOp::add: return lhs + rhs;
    case ArithOp::sub: return lhs - rhs;
    case ArithOp::mul: return lhs * rhs;
    case ArithOp::div: return lhs / rhs;
  }
  throw std::invalid_argument("unknown op");
}

QuadExt embed_rational(const Rational& x, const Rational& m) { return QuadExt(x, 0, m); }

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

}  // namespace ratcomp
