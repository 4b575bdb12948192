#include "ratcomp/poly.hpp"

#include <cctype>
#include <type_traits>

namespace ratcomp {

template class Poly<Rational>;
template class Poly<QuadExt>;
template class RationalFunction<Rational>;
template class RationalFunction<QuadExt>;

namespace {

template <class F>
class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : src_(normalise(s)) {}

  RationalFunction<F> run() {
    auto r = expr();
    skip();
    if (pos_ != src_.size()) fail("trailing input");
    return r;
  }

 private:
  using RF = RationalFunction<F>;

  // Maps the Unicode minus sign to '-'.
  static std::string normalise(std::string_view s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
          static_cast<unsigned char>(s[i + 1]) == 0x88 && static_cast<unsigned char>(s[i + 2]) == 0x92) {
        out += '-';
        i += 2;
      } else {
        out += s[i];
      }
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("parse error at " + std::to_string(pos_) + " (" + why + "): '" + src_ + "'");
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < src_.size() && src_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  RF expr() {
    RF acc = term();
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  bool starts_atom() {
    skip();
    if (pos_ >= src_.size()) return false;
    char c = src_[pos_];
    return c == '(' || c == 'x' || c == 's' || std::isdigit(static_cast<unsigned char>(c));
  }

  RF term() {
    RF acc = unary();
    for (;;) {
      if (accept('*'))
        acc = acc * unary();
      else if (accept('/'))
        acc = acc / unary();
      else if (starts_atom())
        acc = acc * power();
      else
        return acc;
    }
  }

  RF unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  long integer() {
    skip();
    bool neg = false;
    if (accept('-')) neg = true;
    skip();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long v = std::stol(src_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  RF power() {
    RF base = atom();
    if (accept('^')) {
      long e;
      if (accept('(')) {
        e = integer();
        expect(')');
      } else {
        e = integer();
      }
      if (base.is_zero() && e < 0) fail("zero to a negative power");
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }

  RF atom() {
    skip();
    if (pos_ >= src_.size()) fail("unexpected end");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      RF r = expr();
      expect(')');
      return r;
    }
    if (c == 'x') {
      ++pos_;
      return RF::x();
    }
    if (src_.compare(pos_, 5, "sqrt(") == 0) {
      pos_ += 5;
      RF inner = expr();
      expect(')');
      if (!inner.is_constant()) fail("sqrt of a non-constant");
      return RF(sqrt_of(inner.numer().coeff(0)));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return RF(F(Rational::parse(src_.substr(start, pos_ - start))));
    }
    fail("unexpected character");
  }

  F sqrt_of(const F& v) {
    if constexpr (std::is_same_v<F, QuadExt>) {
      if (!v.is_rational()) fail("sqrt of an irrational element");
      if (auto r = v.a().sqrt()) return F(*r);
      return QuadExt(0, 1, v.a());
    } else {
      if (auto r = v.sqrt()) return *r;
      fail("sqrt of a non-square over Q");
    }
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class F>
RationalFunction<F> parse_rational_function(std::string_view text) {
  return ExprParser<F>(text).run();
}

template RationalFunction<Rational> parse_rational_function<Rational>(std::string_view);
template RationalFunction<QuadExt> parse_rational_function<QuadExt>(std::string_view);

}  // namespace ratcomp
