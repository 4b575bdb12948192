#include "ratcomp/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ratcomp {

std::string VarId::name() const {
  switch (kind) {
    case VarKind::alpha: return "a" + std::to_string(index);
    case VarKind::beta: return "b" + std::to_string(index);
    case VarKind::alpha0: return "a0";
    case VarKind::dvar: return "d";
    case VarKind::dinv: return "z";
    case VarKind::aux: return "w" + std::to_string(index);
  }
  return "?";
}

VarId VarId::parse(std::string_view s) {
  if (s == "a0") return alpha0();
  if (s == "d") return d();
  if (s == "z") return dinv();
  if (s.size() >= 2) {
    std::string digits(s.substr(1));
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int i = std::stoi(digits);
      if (s[0] == 'a' && i >= 1) return alpha(i);
      if (s[0] == 'b' && i >= 1) return beta(i);
      if (s[0] == 'w') return aux(i);
    }
  }
  throw ParseError("unknown variable '" + std::string(s) + "'");
}

// ---- Monomial ----

Monomial::Monomial(VarId v, unsigned e) {
  if (e > 0) p_.emplace_back(v, e);
}

unsigned Monomial::degree(VarId v) const {
  for (const auto& [w, e] : p_)
    if (w == v) return e;
  return 0;
}

unsigned Monomial::total_degree() const {
  unsigned s = 0;
  for (const auto& pe : p_) s += pe.second;
  return s;
}

bool Monomial::divides(const Monomial& o) const {
  std::size_t j = 0;
  for (const auto& [v, e] : p_) {
    while (j < o.p_.size() && o.p_[j].first < v) ++j;
    if (j == o.p_.size() || o.p_[j].first != v || o.p_[j].second < e) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.p_.size() || j < b.p_.size()) {
    if (j == b.p_.size() || (i < a.p_.size() && a.p_[i].first < b.p_[j].first)) {
      r.p_.push_back(a.p_[i++]);
    } else if (i == a.p_.size() || b.p_[j].first < a.p_[i].first) {
      r.p_.push_back(b.p_[j++]);
    } else {
      r.p_.emplace_back(a.p_[i].first, a.p_[i].second + b.p_[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

std::string Monomial::str() const {
  std::string s;
  for (const auto& [v, e] : p_) {
    if (!s.empty()) s += "*";
    s += v.name();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

// ---- MultiPoly ----

MultiPoly::MultiPoly(Rational c) {
  if (!c.is_zero()) t_.emplace(Monomial(), std::move(c));
}

MultiPoly::MultiPoly(VarId v) { t_.emplace(Monomial(v), Rational(1)); }

MultiPoly::MultiPoly(const Monomial& m, Rational c) {
  if (!c.is_zero()) t_.emplace(m, std::move(c));
}

bool MultiPoly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }

Rational MultiPoly::constant_term() const {
  auto it = t_.find(Monomial());
  return it == t_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& mc : t_) d = std::max(d, mc.first.total_degree());
  return d;
}

unsigned MultiPoly::degree(VarId v) const {
  unsigned d = 0;
  for (const auto& mc : t_) d = std::max(d, mc.first.degree(v));
  return d;
}

std::set<VarId> MultiPoly::variables() const {
  std::set<VarId> s;
  for (const auto& mc : t_)
    for (const auto& pe : mc.first.powers()) s.insert(pe.first);
  return s;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& mc : r.t_) mc.second = -mc.second;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
  return r;
}

MultiPoly operator*(MultiPoly a, const Rational& c) {
  if (c.is_zero()) return MultiPoly();
  for (auto& mc : a.t_) mc.second *= c;
  return a;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r(Rational(1)), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::map<VarId, MultiPoly>& s) const {
  MultiPoly r;
  for (const auto& [m, c] : t_) {
    MultiPoly term(Monomial(), c);
    Monomial kept;
    for (const auto& [v, e] : m.powers()) {
      auto it = s.find(v);
      if (it == s.end())
        kept = kept * Monomial(v, e);
      else
        term = term * it->second.pow(e);
    }
    r += term * MultiPoly(kept, Rational(1));
  }
  return r;
}

std::map<unsigned, MultiPoly> MultiPoly::coefficients_in(VarId v) const {
  std::map<unsigned, MultiPoly> out;
  for (const auto& [m, c] : t_) {
    Monomial rest;
    unsigned e = 0;
    for (const auto& [w, k] : m.powers()) {
      if (w == v)
        e = k;
      else
        rest = rest * Monomial(w, k);
    }
    out[e].add_term(rest, c);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

namespace {

// Display order: total degree first, then lex with a1 > a2 > ... > b1 > ... > a0 > d > z > w.
bool display_greater(const Monomial& a, const Monomial& b) {
  unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  const auto& pa = a.powers();
  const auto& pb = b.powers();
  std::size_t i = 0, j = 0;
  while (i < pa.size() && j < pb.size()) {
    if (pa[i] == pb[j]) {
      ++i;
      ++j;
      continue;
    }
    if (pa[i].first != pb[j].first) return pa[i].first < pb[j].first;
    return pa[i].second > pb[j].second;
  }
  return i < pa.size();
}

std::vector<std::pair<Monomial, Rational>> display_terms(const MultiPoly::Terms& t) {
  std::vector<std::pair<Monomial, Rational>> v(t.begin(), t.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return display_greater(x.first, y.first); });
  return v;
}

}  // namespace

MultiPoly MultiPoly::primitive() const {
  if (t_.empty()) return *this;
  return *this * display_terms(t_).front().second.inverse();
}

std::string MultiPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : display_terms(t_)) {
    bool neg = c.sign() < 0;
    Rational a = c.abs();
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (m.is_one())
      out += a.str();
    else if (a.is_one())
      out += m.str();
    else
      out += a.str() + "*" + m.str();
  }
  return out;
}

namespace {

class MParser {
 public:
  explicit MParser(std::string_view s) : s_(s) {}

  MultiPoly run() {
    MultiPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial parse error (" + why + "): '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc;
    if (accept('-'))
      acc = -term();
    else {
      accept('+');
      acc = term();
    }
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = power();
    for (;;) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        MultiPoly den = power();
        if (!den.is_constant() || den.is_zero()) fail("division by a non-constant or zero");
        acc = acc * den.constant_term().inverse();
      } else {
        return acc;
      }
    }
  }

  MultiPoly power() {
    MultiPoly b = atom();
    if (accept('^')) {
      skip();
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (st == pos_) fail("expected exponent");
      b = b.pow(static_cast<unsigned>(std::stoul(s_.substr(st, pos_ - st))));
    }
    return b;
  }

  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    std::size_t st = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MultiPoly(Rational::parse(s_.substr(st, pos_ - st)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MultiPoly(VarId::parse(s_.substr(st, pos_ - st)));
    }
    fail("unexpected character");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view s) { return MParser(s).run(); }

MultiPoly mpoly_arith(const MultiPoly& a, const MultiPoly& b, MPolyOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: break;
  }
  throw std::invalid_argument("mpoly_arith: division is not a ring operation");
}

}  // namespace ratcomp
