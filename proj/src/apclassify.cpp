#include "ratcomp/apclassify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ratcomp/groebner.hpp"
#include "ratcomp/linalg.hpp"
#include "ratcomp/parallel.hpp"

namespace ratcomp {

// ---- assignments ----

void APAssignment::validate(int n) const {
  std::vector<int> s = T;
  std::sort(s.begin(), s.end());
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(s.size()) != n || s[static_cast<std::size_t>(i)] != i)
      throw std::invalid_argument("progression positions must be a permutation of 0..n-1: " + str());
}

APAssignment APAssignment::reflected() const {
  APAssignment r = *this;
  int n = static_cast<int>(T.size());
  for (auto& v : r.T) v = n - 1 - v;
  return r;
}

std::string APAssignment::str() const {
  std::string s;
  for (std::size_t i = 0; i < T.size(); ++i) s += (i ? "," : "") + std::to_string(T[i]);
  return s;
}

APAssignment APAssignment::parse(std::string_view s) {
  APAssignment a;
  std::string cur;
  for (char ch : std::string(s) + ",") {
    if (ch == ',') {
      if (cur.empty()) throw ParseError("bad progression '" + std::string(s) + "'");
      a.T.push_back(std::stoi(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  a.validate(static_cast<int>(a.T.size()));
  return a;
}

std::vector<APAssignment> APAssignment::all(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<APAssignment> out;
  do out.push_back({p});
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Contradiction: return "Contradiction";
    case VerdictKind::TrivialDecomposition: return "TrivialDecomposition";
    case VerdictKind::Family: return "Family";
  }
  return "?";
}

std::string to_string(Reason r) {
  switch (r) {
    case Reason::deg_h_below_2: return "deg-h-below-2";
    case Reason::beta_coincide: return "beta-coincide";
    case Reason::power_inconsistency: return "power-inconsistency";
    case Reason::roots_coincide: return "roots-coincide";
    case Reason::extra_zeros_poles: return "extra-zeros-poles";
    case Reason::identity_fails: return "identity-fails";
    case Reason::too_few_zeros_poles: return "too-few-zeros-poles";
    case Reason::family: return "family";
  }
  return "?";
}

VerdictKind parse_verdict_kind(std::string_view s) {
  for (auto k : {VerdictKind::Contradiction, VerdictKind::TrivialDecomposition, VerdictKind::Family})
    if (to_string(k) == s) return k;
  throw ParseError("unknown verdict '" + std::string(s) + "'");
}

Reason parse_reason(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(Reason::family); ++i)
    if (to_string(static_cast<Reason>(i)) == s) return static_cast<Reason>(i);
  throw ParseError("unknown reason '" + std::string(s) + "'");
}

// ---- progression algebra ----

namespace {

MultiPoly dpow(int e) {
  if (e >= 0) return MultiPoly(Monomial(VarId::d(), static_cast<unsigned>(e)), Rational(1));
  return MultiPoly(Monomial(VarId::dinv(), static_cast<unsigned>(-e)), Rational(1));
}

MultiPoly beta(std::size_t j) { return MultiPoly(VarId::beta(static_cast<int>(j + 1))); }

int pos(const APAssignment& T, int m) { return T.T[static_cast<std::size_t>(m - 1)]; }

// omega(a_m) / d^sigma for the given members.
Rational omega_at(const CaseSpec& c, const APAssignment& T, const std::vector<int>& members, int m) {
  Rational v(1);
  for (int r : members) v *= Rational(pos(T, m) - pos(T, r)).pow(c.l_of(r));
  return v;
}

int sigma(const CaseSpec& c, const std::vector<int>& members) {
  int s = 0;
  for (int r : members) s += c.l_of(r);
  return s;
}

std::vector<int> roots_of_f(const CaseSpec& c, const std::vector<std::vector<int>>& groups) {
  std::vector<int> out;
  for (const auto& g : groups)
    for (int m : g)
      if (c.l_of(m) > 0) out.push_back(m);
  return out;
}

}  // namespace

std::vector<MultiPoly> substitute_ap(const std::vector<MultiPoly>& gens, const APAssignment& T) {
  std::map<VarId, MultiPoly> s;
  for (std::size_t i = 0; i < T.T.size(); ++i)
    s[VarId::alpha(static_cast<int>(i + 1))] =
        MultiPoly(VarId::alpha0()) + MultiPoly(VarId::d()) * Rational(T.T[i]);
  std::vector<MultiPoly> out;
  for (const auto& g : gens) out.push_back(g.substitute(s));
  return out;
}

std::vector<MultiPoly> substitution_system(const CaseSpec& c, const APAssignment& T) {
  std::vector<MultiPoly> out;
  auto push = [&](MultiPoly p) {
    if (!p.is_zero()) out.push_back(std::move(p));
  };
  const std::size_t t = c.blocks.size();
  if (!c.ksum_zero) {
    int si = sigma(c, c.s_inf);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = i + 1; j < t; ++j) {
        int sgi = c.block_sum(i), sgj = c.block_sum(j);
        for (int m : roots_of_f(c, {c.blocks[i], c.blocks[j], c.s_inf})) {
          MultiPoly e = dpow(sgi) * omega_at(c, T, c.blocks[i], m) - dpow(sgj) * omega_at(c, T, c.blocks[j], m) -
                        (beta(j) - beta(i)) * dpow(si) * omega_at(c, T, c.s_inf, m);
          push(std::move(e));
        }
      }
    return out;
  }
  for (std::size_t j1 = 0; j1 < t; ++j1)
    for (std::size_t j2 = j1 + 1; j2 < t; ++j2)
      for (std::size_t j3 = j2 + 1; j3 < t; ++j3)
        for (int m : roots_of_f(c, {c.blocks[j1], c.blocks[j2], c.blocks[j3]})) {
          auto w = [&](std::size_t j) { return dpow(c.block_sum(j)) * omega_at(c, T, c.blocks[j], m); };
          push((beta(j1) - beta(j2)) * w(j3) + (beta(j3) - beta(j1)) * w(j2) + (beta(j2) - beta(j3)) * w(j1));
        }
  return out;
}

std::vector<MultiPoly> beta_difference_choices(const CaseSpec& c, const APAssignment& T, std::size_t i,
                                               std::size_t j) {
  if (c.ksum_zero) throw std::invalid_argument("beta_difference_choices: zero k-sum case");
  std::vector<MultiPoly> out;
  int si = sigma(c, c.s_inf);
  for (int r : c.blocks[i]) {
    if (c.l_of(r) == 0) continue;
    Rational v = omega_at(c, T, c.blocks[j], r) / omega_at(c, T, c.s_inf, r);
    out.push_back(dpow(c.block_sum(j) - si) * v);
  }
  for (int s : c.blocks[j]) {
    if (c.l_of(s) == 0) continue;
    Rational v = -(omega_at(c, T, c.blocks[i], s) / omega_at(c, T, c.s_inf, s));
    out.push_back(dpow(c.block_sum(i) - si) * v);
  }
  return out;
}

DConstraints derive_d_constraints(const CaseSpec& c, const APAssignment& T) {
  if (c.ksum_zero) throw std::invalid_argument("derive_d_constraints: zero k-sum case");
  DConstraints out;
  const std::size_t t = c.blocks.size();
  auto allzero = [&](std::size_t j) { return c.block_sum(j) == 0; };
  auto Q = [&](int m) { return omega_at(c, T, c.s_inf, m); };
  auto P = [&](std::size_t j, int m) { return omega_at(c, T, c.blocks[j], m); };
  auto tag = [](std::size_t i, std::size_t j, int r, int s) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(r) + "," +
           std::to_string(s) + ")";
  };
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) {
      if (allzero(i) && allzero(j)) {
        out.beta_shortcut = true;
        out.shortcut_detail = "blocks " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " have all-zero exponents, so b" + std::to_string(i + 1) + " = b" +
                              std::to_string(j + 1);
        return out;
      }
      if (!allzero(i) && !allzero(j)) {
        for (int r : c.blocks[i]) {
          if (c.l_of(r) == 0) continue;
          for (int s : c.blocks[j]) {
            if (c.l_of(s) == 0) continue;
            Rational M = -(P(j, r) * Q(s)) / (Q(r) * P(i, s));
            int N = c.block_sum(i) - c.block_sum(j);
            if (N < 0) {
              N = -N;
              M = M.inverse();
            }
            out.constraints.push_back({N, M, tag(i, j, r, s)});
          }
        }
        continue;
      }
      // One block has omega = 1.
      std::size_t z = allzero(i) ? i : j;
      std::size_t nz = allzero(i) ? j : i;
      for (int r : c.blocks[z])
        for (int s : c.blocks[nz]) {
          if (c.l_of(s) == 0) continue;
          Rational M = (Q(s) - Q(r)) / (Q(s) * P(nz, r));
          out.constraints.push_back({c.block_sum(nz), M, tag(i, j, z == i ? r : s, z == i ? s : r)});
        }
    }
  return out;
}

namespace {

long ext_gcd(long a, long b, long& x, long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long x1, y1;
  long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

CombinedPower combine_constraints(const std::vector<PowerConstraint>& cs) {
  CombinedPower out;
  for (const auto& pc : cs) {
    if (pc.N == 0) {
      if (!pc.M.is_one()) {
        out.consistent = false;
        out.detail = "d^0 = " + pc.M.str() + " from " + pc.origin;
        return out;
      }
      continue;
    }
    if (pc.M.is_zero()) {
      out.forces_zero = true;
      out.detail = "d^" + std::to_string(pc.N) + " = 0 from " + pc.origin;
      return out;
    }
    if (out.N == 0) {
      out.N = pc.N;
      out.M = pc.M;
      continue;
    }
    long a, b;
    long g = ext_gcd(out.N, pc.N, a, b);
    if (out.M.pow(pc.N / g) != pc.M.pow(out.N / g)) {
      out.consistent = false;
      out.detail = "d^" + std::to_string(out.N) + " = " + out.M.str() + " vs " + pc.str() + " from " + pc.origin;
      return out;
    }
    out.M = out.M.pow(a) * pc.M.pow(b);
    out.N = static_cast<int>(g);
  }
  return out;
}

// ---- classification ----

namespace {

MonomialOrder solve_order(int t) {
  std::vector<VarId> prec;
  for (int j = t; j >= 1; --j) prec.push_back(VarId::beta(j));
  prec.push_back(VarId::dinv());
  prec.push_back(VarId::d());
  return MonomialOrder::lex(prec);
}

std::vector<MultiPoly> beta_differences(int t) { return pairwise_differences(beta_vars(t)); }

std::optional<QPoly> univariate_d(const std::vector<MultiPoly>& gb) {
  for (const auto& g : gb) {
    auto vars = g.variables();
    if (vars.size() == 1 && *vars.begin() == VarId::d()) {
      std::vector<Rational> coeffs(g.degree(VarId::d()) + 1, Rational(0));
      for (const auto& [m, c] : g.terms()) coeffs[m.degree(VarId::d())] = c;
      return QPoly(std::move(coeffs));
    }
  }
  return std::nullopt;
}

struct Point {
  QuadExt d;
  std::vector<QuadExt> beta;
};

// Solves a system that is linear in the betas once d is fixed.
std::optional<std::vector<QuadExt>> betas_at(const std::vector<MultiPoly>& sys, int t, const QuadExt& d) {
  std::vector<std::vector<QuadExt>> A;
  std::vector<QuadExt> b;
  QuadExt dinv = d.inverse();
  for (const auto& g : sys) {
    std::vector<QuadExt> row(static_cast<std::size_t>(t), QuadExt(0));
    QuadExt rhs(0);
    for (const auto& [m, c] : g.terms()) {
      QuadExt v(c);
      int bj = -1;
      for (const auto& [var, e] : m.powers()) {
        if (var.kind == VarKind::beta) {
          if (e != 1 || bj >= 0) throw std::logic_error("system not linear in beta");
          bj = var.index - 1;
        } else if (var.kind == VarKind::dvar) {
          v *= d.pow(e);
        } else if (var.kind == VarKind::dinv) {
          v *= dinv.pow(e);
        } else {
          throw std::logic_error("unexpected variable " + var.name());
        }
      }
      if (bj >= 0)
        row[static_cast<std::size_t>(bj)] += v;
      else
        rhs -= v;
    }
    A.push_back(std::move(row));
    b.push_back(std::move(rhs));
  }
  auto sol = solve_affine(A, b, static_cast<std::size_t>(t));
  if (!sol) return std::nullopt;
  for (long trial = 0; trial < 12; ++trial) {
    std::vector<QuadExt> s;
    for (std::size_t k = 0; k < sol->basis.size(); ++k) s.push_back(QuadExt(trial * static_cast<long>(k + 1) + static_cast<long>(k)));
    auto x = sol->at(s);
    bool distinct = true;
    for (std::size_t i = 0; i < x.size() && distinct; ++i)
      for (std::size_t j = i + 1; j < x.size() && distinct; ++j)
        if (x[i] == x[j]) distinct = false;
    if (distinct) return x;
  }
  return std::nullopt;
}

std::vector<QuadExt> d_candidates(const std::optional<QPoly>& p) {
  std::vector<QuadExt> out;
  if (p) {
    for (auto& r : small_field_roots(*p))
      if (!r.is_zero()) out.push_back(r);
    return out;
  }
  for (long v : {1L, 2L, -1L, 3L, 5L}) out.push_back(QuadExt(v));
  return out;
}

std::optional<Point> find_point(const std::vector<MultiPoly>& sys, int t, const std::optional<QPoly>& dpoly) {
  for (const auto& d : d_candidates(dpoly)) {
    if (auto bs = betas_at(sys, t, d)) return Point{d, *bs};
  }
  return std::nullopt;
}

KRatFun omega_rf(const CaseSpec& c, const std::vector<int>& members, const std::vector<QuadExt>& alpha) {
  KPoly p(QuadExt(1));
  for (int m : members) p = p * KPoly::linear(alpha[static_cast<std::size_t>(m - 1)]).pow(static_cast<unsigned>(c.l_of(m)));
  return KRatFun(p);
}

// Largest zero/pole count of g(h) over the available representations of h at the point.
std::pair<int, std::string> extra_count(const CaseSpec& c, const APAssignment& T, const Point& pt) {
  std::vector<QuadExt> alpha;
  for (int m = 1; m <= c.n; ++m) alpha.push_back(pt.d * QuadExt(pos(T, m)));
  const std::size_t t = c.blocks.size();
  std::vector<long> k(t, 1);
  if (c.ksum_zero) k.back() = -static_cast<long>(t - 1);
  KRatFun g(KPoly(QuadExt(1)));
  for (std::size_t j = 0; j < t; ++j) g = g * KRatFun(KPoly::linear(pt.beta[j])).pow(static_cast<int>(k[j]));
  int best = -1;
  std::string which;
  auto consider = [&](const KRatFun& h, const std::string& label) {
    if (h.degree() < 1) return;
    int cnt = count_zeros_poles(compose(g, h));
    if (cnt > best) {
      best = cnt;
      which = label;
    }
  };
  if (!c.ksum_zero) {
    KRatFun q = omega_rf(c, c.s_inf, alpha);
    for (std::size_t j = 0; j < t; ++j)
      consider(KRatFun(pt.beta[j]) + omega_rf(c, c.blocks[j], alpha) / q, "h from block " + std::to_string(j + 1));
  } else {
    for (std::size_t a = 0; a < t; ++a)
      for (std::size_t b = a + 1; b < t; ++b) {
        KRatFun wa = omega_rf(c, c.blocks[a], alpha), wb = omega_rf(c, c.blocks[b], alpha);
        if ((wb - wa).is_zero()) continue;
        consider((KRatFun(pt.beta[a]) * wb - KRatFun(pt.beta[b]) * wa) / (wb - wa),
                 "h from blocks " + std::to_string(a + 1) + "," + std::to_string(b + 1));
      }
  }
  return {best, which};
}

std::string field_label(const QuadExt& d) {
  return d.is_rational() || !d.radicand() ? "Q" : "Q(sqrt(" + d.radicand()->str() + "))";
}

Verdict make(VerdictKind k, Reason r, std::string detail) {
  Verdict v;
  v.kind = k;
  v.reason = r;
  v.detail = std::move(detail);
  return v;
}

}  // namespace

std::string family_class_key(const CaseSpec& c, const APAssignment& T, const std::optional<MultiPoly>& d_relation) {
  const int n = c.n;
  std::vector<std::pair<int, int>> seq(static_cast<std::size_t>(n));  // (block or -1, l) by position
  for (int m = 1; m <= n; ++m) seq[static_cast<std::size_t>(pos(T, m))] = {c.block_of(m), c.l_of(m)};
  auto render = [&](const std::vector<std::pair<int, int>>& s) {
    std::map<int, char> label;
    std::string out;
    for (const auto& [b, l] : s) {
      char ch = 'I';
      if (b >= 0) {
        if (!label.count(b)) label[b] = static_cast<char>('A' + label.size());
        ch = label[b];
      }
      out += ch + std::to_string(l) + " ";
    }
    out.pop_back();
    return out;
  };
  std::string fwd = render(seq);
  std::reverse(seq.begin(), seq.end());
  std::string rev = render(seq);
  std::string drel = "d-free";
  if (d_relation) {
    MultiPoly neg = d_relation->substitute({{VarId::d(), -MultiPoly(VarId::d())}});
    std::string a = d_relation->primitive().str(), b = neg.primitive().str();
    drel = std::min(a, b) + " = 0";
  }
  return regime_label(c) + " [" + std::min(fwd, rev) + "] " + drel;
}

Verdict classify_case(const CaseSpec& c, const APAssignment& T) {
  T.validate(c.n);
  const int t = c.t;
  if (c.deg_h() < 2)
    return make(VerdictKind::TrivialDecomposition, Reason::deg_h_below_2, "deg h = " + std::to_string(c.deg_h()));

  std::optional<PowerConstraint> power;
  if (!c.ksum_zero) {
    auto dc = derive_d_constraints(c, T);
    if (dc.beta_shortcut) return make(VerdictKind::Contradiction, Reason::beta_coincide, dc.shortcut_detail);
    auto comb = combine_constraints(dc.constraints);
    if (!comb.consistent) return make(VerdictKind::Contradiction, Reason::power_inconsistency, comb.detail);
    if (comb.forces_zero) return make(VerdictKind::Contradiction, Reason::roots_coincide, comb.detail);
    if (comb.N > 0) power = PowerConstraint{comb.N, comb.M, "combined"};
  }
  auto with_power = [&](Verdict v) {
    v.power = power;
    return v;
  };

  const MonomialOrder ord = solve_order(t);
  const MultiPoly dvar(VarId::d());
  std::vector<MultiPoly> sub = substitution_system(c, T);
  if (power) sub.push_back(dvar.pow(static_cast<unsigned>(power->N)) - MultiPoly(power->M));
  // z never survives into these systems: clear 1/d by multiplying through.
  for (auto& g : sub) {
    unsigned e = g.degree(VarId::dinv());
    if (e) g = (g * dvar.pow(e)).substitute({{VarId::dinv(), MultiPoly(1)}});
  }

  std::vector<MultiPoly> I1 = sub.empty() ? std::vector<MultiPoly>{} : saturate(sub, dvar, ord);
  if (is_unit_ideal(I1))
    return with_power(make(VerdictKind::Contradiction, Reason::roots_coincide,
                           "substituted roots force d = 0"));
  std::vector<MultiPoly> I2 = I1.empty() ? I1 : saturate_all(I1, beta_differences(t), ord);
  if (is_unit_ideal(I2))
    return with_power(make(VerdictKind::Contradiction, Reason::beta_coincide,
                           "substituted roots force b_i = b_j"));

  // The ideal is translation invariant, single coefficients need not be: put a0 = 0.
  std::vector<MultiPoly> full;
  for (auto& g : substitute_ap(build_system(c).gens, T)) {
    MultiPoly r = g.substitute({{VarId::alpha0(), MultiPoly(0)}});
    if (!r.is_zero()) full.push_back(std::move(r));
  }
  std::vector<MultiPoly> J = full;
  J.insert(J.end(), I2.begin(), I2.end());
  std::vector<MultiPoly> sats = beta_differences(t);
  sats.insert(sats.begin(), dvar);
  J = J.empty() ? J : saturate_all(J, sats, ord);

  if (is_unit_ideal(J)) {
    std::vector<MultiPoly> linear = sub;
    auto pt = find_point(linear, t, univariate_d(I2));
    if (!pt)
      return with_power(make(VerdictKind::Contradiction, Reason::identity_fails,
                             "identity inconsistent; no witness point in Q or a quadratic field"));
    auto [cnt, which] = extra_count(c, T, *pt);
    Verdict v = make(VerdictKind::Contradiction, cnt > c.n ? Reason::extra_zeros_poles : Reason::identity_fails,
                     "d = " + pt->d.str() + ", " + which + ": g(h) has " + std::to_string(cnt) +
                         " distinct zeros and poles");
    v.witness_count = cnt;
    v.witness_field = field_label(pt->d);
    return with_power(v);
  }

  if (c.nonzero_exponents() < c.n)
    return with_power(make(VerdictKind::Contradiction, Reason::too_few_zeros_poles,
                           "f has only " + std::to_string(c.nonzero_exponents()) + " zeros and poles"));

  // Surviving family: solve for the betas with z = 1/d available.
  std::vector<MultiPoly> K = J;
  K.push_back(MultiPoly(VarId::dinv()) * dvar - MultiPoly(1));
  auto gb = buchberger(K, ord);
  SolutionFamily fam;
  fam.spec = c;
  fam.T = T.T;
  fam.parameters = {VarId::alpha0(), VarId::d()};
  for (int m = 1; m <= c.n; ++m)
    fam.alpha_forms[VarId::alpha(m)] = MultiPoly(VarId::alpha0()) + dvar * Rational(pos(T, m));
  for (int j = 1; j <= t; ++j) {
    MultiPoly nf = reduce(MultiPoly(VarId::beta(j)), gb, ord);
    fam.beta_forms[VarId::beta(j)] = nf;
    if (nf == MultiPoly(VarId::beta(j))) fam.parameters.push_back(VarId::beta(j));
  }
  if (auto p = univariate_d(gb)) {
    MultiPoly rel;
    for (std::size_t k = 0; k < p->coeffs().size(); ++k) rel += dvar.pow(static_cast<unsigned>(k)) * p->coeffs()[k];
    fam.d_relation = rel;
  }
  if (power) fam.d_constraints.push_back(*power);
  fam.class_key = family_class_key(c, T, fam.d_relation);

  // Sanity: the family must verify at a concrete point.
  auto pt = find_point(full, t, univariate_d(gb));
  if (!pt) throw std::logic_error("no sample point for family " + c.id() + " T=" + T.str());
  std::map<VarId, QuadExt> params{{VarId::alpha0(), QuadExt(0)}, {VarId::d(), pt->d}};
  for (const auto& v : fam.parameters)
    if (v.kind == VarKind::beta) params[v] = pt->beta[static_cast<std::size_t>(v.index - 1)];
  std::vector<long> k(static_cast<std::size_t>(t), 1);
  if (c.ksum_zero) k.back() = -(t - 1);
  verify_family(fam, params, k, c.id());

  Verdict v = make(VerdictKind::Family, Reason::family, fam.class_key);
  v.family = std::move(fam);
  return with_power(v);
}

// ---- sweep ----

std::string regime_label(const CaseSpec& c) {
  std::string r = c.ksum_zero ? "III" : (c.s_inf.empty() ? "I" : "II");
  return "(" + r + ") t=" + std::to_string(c.t);
}

std::vector<std::pair<CaseSpec, APAssignment>> sweep_grid(int n, const EnumConfig& cfg) {
  std::vector<std::pair<CaseSpec, APAssignment>> grid;
  auto perms = APAssignment::all(n);
  for (const auto& r : regimes(n))
    for (const auto& c : enum_cases(n, r.t, r.ksum_zero, r.sinf, cfg))
      for (const auto& T : perms) grid.emplace_back(c, T);
  return grid;
}

namespace {

std::string config_label(int n, const EnumConfig& cfg) {
  return "n=" + std::to_string(n) + "; " + cfg.str();
}

}  // namespace

ClassificationReport classify_all_serial(int n, const SweepOptions& opt) {
  ClassificationReport rep;
  rep.n = n;
  rep.config = config_label(n, opt.cfg);
  for (auto& [c, T] : sweep_grid(n, opt.cfg)) {
    Verdict v = classify_case(c, T);
    rep.entries.push_back({c, T, std::move(v)});
  }
  return rep;
}

ClassificationReport classify_all(int n, const SweepOptions& opt) {
  auto grid = sweep_grid(n, opt.cfg);
  std::vector<Verdict> verdicts(grid.size());
  parallel_for(grid.size(), opt.workers, [&](std::size_t i) { verdicts[i] = classify_case(grid[i].first, grid[i].second); });
  ClassificationReport rep;
  rep.n = n;
  rep.config = config_label(n, opt.cfg);
  rep.entries.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    rep.entries.push_back({std::move(grid[i].first), std::move(grid[i].second), std::move(verdicts[i])});
  return rep;
}

std::vector<FamilyClass> ClassificationReport::family_classes() const {
  std::map<std::string, FamilyClass> by;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& v = entries[i].verdict;
    if (v.kind != VerdictKind::Family) continue;
    auto& fc = by[v.family->class_key];
    if (fc.members == 0) {
      fc.key = v.family->class_key;
      fc.representative = i;
    }
    ++fc.members;
  }
  std::vector<FamilyClass> out;
  for (auto& kv : by) out.push_back(kv.second);
  return out;
}

std::map<std::tuple<std::string, std::string, std::string>, std::size_t> ClassificationReport::summary() const {
  std::map<std::tuple<std::string, std::string, std::string>, std::size_t> s;
  for (const auto& e : entries)
    ++s[{regime_label(e.spec), to_string(e.verdict.kind), to_string(e.verdict.reason)}];
  return s;
}

std::optional<LinearHNote> linear_h_note(int n) {
  if (n != 4) return std::nullopt;
  // a0 = 0, d = 1, b1 = 0, b2 = 1, k = (1, 2, -1, -2)
  LinearHNote note{"n4-t4-z-inf-b1|2|3|4-l1,1,1,1", APAssignment::parse("1,0,3,2"), {}, {}, {}};
  const Rational b1 = 0, b2 = 1;
  auto lin = [](const Rational& r) { return QRatFun(QPoly::linear(r)); };
  note.h = QRatFun(QPoly(std::vector<Rational>{b2, b1 - b2}));
  note.g = lin(b1) * lin(b2).pow(2) * lin(Rational(3) * b1 - Rational(2) * b2).pow(-1) *
           lin(Rational(2) * b1 - b2).pow(-2);
  note.f = lin(1) * lin(0).pow(2) * lin(3).pow(-1) * lin(2).pow(-2);
  if (!equal(compose(note.g, note.h), note.f)) throw std::logic_error("linear-h note does not compose");
  return note;
}

std::string ClassificationReport::summary_table() const {
  std::ostringstream os;
  os << "progression sweep, " << config << "\n";
  os << "regime        verdict               reason                 count\n";
  for (const auto& [k, cnt] : summary()) {
    const auto& [reg, kind, reason] = k;
    os << reg;
    os << std::string(14 - std::min<std::size_t>(13, reg.size()), ' ') << kind
       << std::string(22 - std::min<std::size_t>(21, kind.size()), ' ') << reason
       << std::string(23 - std::min<std::size_t>(22, reason.size()), ' ') << cnt << "\n";
  }
  auto fams = family_classes();
  os << "surviving family classes: " << fams.size() << "\n";
  for (const auto& fc : fams) {
    const auto& e = entries[fc.representative];
    os << "  " << fc.key << "  (" << fc.members << " entries; e.g. " << e.spec.id() << " T=" << e.T.str() << ")\n";
  }
  if (auto note = linear_h_note(n)) {
    os << "filed as trivial (deg h = 1): " << note->case_id << " T=" << note->T.str() << "\n"
       << "  f = " << note->f.str() << "\n  g = " << note->g.str() << "\n  h = " << note->h.str() << "\n";
  }
  return os.str();
}

}  // namespace ratcomp
