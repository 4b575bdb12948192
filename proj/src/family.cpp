#include "ratcomp/family.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ratcomp/apclassify.hpp"

namespace ratcomp {

// ---- witnesses ----

DecompositionWitness DecompositionWitness::make(KRatFun f, KRatFun g, KRatFun h, std::string provenance) {
  if (g.degree() < 2 || h.degree() < 2)
    throw VerificationError(provenance + ": trivial decomposition (deg g = " + std::to_string(g.degree()) +
                            ", deg h = " + std::to_string(h.degree()) + ")");
  if (!equal(compose(g, h), f))
    throw VerificationError(provenance + ": g(h) != f\n  g = " + g.str() + "\n  h = " + h.str() + "\n  f = " + f.str());
  return DecompositionWitness(std::move(f), std::move(g), std::move(h), std::move(provenance));
}

std::optional<Rational> DecompositionWitness::field() const {
  std::optional<Rational> m;
  auto scan = [&](const KPoly& p) {
    for (const auto& c : p.coeffs())
      if (!c.is_rational() && c.radicand()) m = c.radicand();
  };
  for (const auto* r : {&f_, &g_, &h_}) {
    scan(r->numer());
    scan(r->denom());
  }
  return m;
}

std::string DecompositionWitness::field_name() const {
  auto m = field();
  return m ? "Q(sqrt(" + m->str() + "))" : "Q";
}

// ---- families ----

std::string SolutionFamily::exponent_pattern() const {
  std::string s;
  for (int m = 1; m <= spec.n; ++m) {
    int l = spec.l_of(m);
    if (l == 0) continue;
    int b = spec.block_of(m);
    std::string e;
    if (b >= 0) {
      e = (l == 1 ? "" : std::to_string(l) + "*") + "k" + std::to_string(b + 1);
    } else {
      std::string ks;
      for (int j = 1; j <= spec.t; ++j) ks += (j > 1 ? "+k" : "k") + std::to_string(j);
      e = "-" + (l == 1 ? "" : std::to_string(l) + "*") + "(" + ks + ")";
    }
    if (!s.empty()) s += " ";
    s += "a" + std::to_string(m) + "^(" + e + ")";
  }
  return s;
}

bool admissible_k(const CaseSpec& c, const std::vector<long>& k) {
  if (static_cast<int>(k.size()) != c.t) return false;
  if (std::any_of(k.begin(), k.end(), [](long v) { return v == 0; })) return false;
  long s = std::accumulate(k.begin(), k.end(), 0L);
  return c.ksum_zero ? s == 0 : s != 0;
}

namespace {

struct Instance {
  std::vector<QuadExt> alpha;  // by m-1
  std::vector<QuadExt> beta;   // by j-1
};

// Evaluates the forms and checks every admissibility condition; throws ConstraintError.
Instance instantiate(const SolutionFamily& fam, const std::map<VarId, QuadExt>& params) {
  std::map<VarId, QuadExt> env = params;
  auto dit = env.find(VarId::d());
  if (dit != env.end()) {
    if (dit->second.is_zero()) throw ConstraintError("d = 0 makes the roots coincide");
    env[VarId::dinv()] = dit->second.inverse();
    for (const auto& pc : fam.d_constraints)
      if (!(dit->second.pow(pc.N) == QuadExt(pc.M)))
        throw ConstraintError("d = " + dit->second.str() + " violates " + pc.str());
    if (fam.d_relation && !fam.d_relation->evaluate(env).is_zero())
      throw ConstraintError("d = " + dit->second.str() + " violates " + fam.d_relation->str() + " = 0");
  }
  for (const auto& v : fam.parameters)
    if (!env.count(v)) throw ConstraintError("missing parameter " + v.name());
  Instance in;
  for (int m = 1; m <= fam.spec.n; ++m) {
    auto it = fam.alpha_forms.find(VarId::alpha(m));
    if (it == fam.alpha_forms.end()) throw std::logic_error("family lacks a form for a" + std::to_string(m));
    in.alpha.push_back(it->second.evaluate(env));
  }
  for (int j = 1; j <= fam.spec.t; ++j) {
    auto it = fam.beta_forms.find(VarId::beta(j));
    if (it == fam.beta_forms.end()) throw std::logic_error("family lacks a form for b" + std::to_string(j));
    in.beta.push_back(it->second.evaluate(env));
  }
  for (std::size_t i = 0; i < in.alpha.size(); ++i)
    for (std::size_t j = i + 1; j < in.alpha.size(); ++j)
      if (in.alpha[i] == in.alpha[j])
        throw ConstraintError("a" + std::to_string(i + 1) + " = a" + std::to_string(j + 1));
  for (std::size_t i = 0; i < in.beta.size(); ++i)
    for (std::size_t j = i + 1; j < in.beta.size(); ++j)
      if (in.beta[i] == in.beta[j])
        throw ConstraintError("b" + std::to_string(i + 1) + " = b" + std::to_string(j + 1));
  return in;
}

KRatFun omega_of(const CaseSpec& c, const std::vector<int>& members, const std::vector<QuadExt>& alpha) {
  KPoly p(QuadExt(1));
  for (int m : members)
    p = p * KPoly::linear(alpha[static_cast<std::size_t>(m - 1)]).pow(static_cast<unsigned>(c.l_of(m)));
  return KRatFun(p);
}

}  // namespace

DecompositionWitness verify_family(const SolutionFamily& fam, const std::map<VarId, QuadExt>& params,
                                   const std::vector<long>& k, const std::string& provenance) {
  const CaseSpec& c = fam.spec;
  if (!admissible_k(c, k)) {
    std::string ks;
    for (long v : k) ks += (ks.empty() ? "" : ",") + std::to_string(v);
    throw ConstraintError("k = (" + ks + ") not admissible for " + c.id());
  }
  Instance in = instantiate(fam, params);
  const long ksum = std::accumulate(k.begin(), k.end(), 0L);

  FactoredForm<QuadExt> ff;
  for (int m = 1; m <= c.n; ++m) {
    int b = c.block_of(m);
    long e = b >= 0 ? c.l_of(m) * k[static_cast<std::size_t>(b)] : -c.l_of(m) * ksum;
    if (e != 0) ff.add(in.alpha[static_cast<std::size_t>(m - 1)], static_cast<int>(e));
  }
  KRatFun f = ff.expand();

  KRatFun h;
  if (!c.ksum_zero) {
    h = KRatFun(in.beta[0]) + omega_of(c, c.blocks[0], in.alpha) / omega_of(c, c.s_inf, in.alpha);
  } else {
    KRatFun w1 = omega_of(c, c.blocks[0], in.alpha), w2 = omega_of(c, c.blocks[1], in.alpha);
    if ((w2 - w1).is_zero()) throw VerificationError("degenerate Siegel representation for " + c.id());
    h = (KRatFun(in.beta[0]) * w2 - KRatFun(in.beta[1]) * w1) / (w2 - w1);
  }
  KRatFun g(KPoly(QuadExt(1)));
  for (std::size_t j = 0; j < in.beta.size(); ++j) g = g * KRatFun(KPoly::linear(in.beta[j])).pow(static_cast<int>(k[j]));
  KRatFun ratio = f / compose(g, h);
  if (!ratio.is_constant())
    throw VerificationError((provenance.empty() ? c.id() : provenance) + ": f / g(h) is not constant: " + ratio.str());
  g = g * ratio;
  std::string prov = provenance.empty() ? c.id() : provenance;
  auto w = DecompositionWitness::make(f, g, h, prov);
  int cnt = count_zeros_poles(f);
  if (cnt != c.n)
    throw VerificationError(prov + ": f has " + std::to_string(cnt) + " zeros and poles, expected " +
                            std::to_string(c.n));
  return w;
}

namespace {

MultiPoly V(VarId v) { return MultiPoly(v); }

}  // namespace

SolutionFamily prop1_family() {
  SolutionFamily fam;
  fam.spec = CaseSpec::parse_id("n4-t2-nz-inf-b1,4|2,3-l1,1,1,1");
  fam.T = std::vector<int>{0, 1, 2, 3};
  fam.parameters = {VarId::alpha0(), VarId::d(), VarId::beta(1)};
  for (int m = 1; m <= 4; ++m) fam.alpha_forms[VarId::alpha(m)] = V(VarId::alpha0()) + V(VarId::d()) * Rational(m - 1);
  fam.beta_forms[VarId::beta(1)] = V(VarId::beta(1));
  fam.beta_forms[VarId::beta(2)] = V(VarId::beta(1)) - V(VarId::d()).pow(2) * Rational(2);
  fam.class_key = family_class_key(fam.spec, APAssignment{*fam.T}, std::nullopt);
  return fam;
}

SolutionFamily thm2c_family() {
  SolutionFamily fam;
  fam.spec = CaseSpec::parse_id("n3-t2-nz-inf-b1,2|3-l1,1,2");
  fam.parameters = {VarId::alpha(1), VarId::alpha(2), VarId::beta(2)};
  MultiPoly a1 = V(VarId::alpha(1)), a2 = V(VarId::alpha(2));
  fam.alpha_forms[VarId::alpha(1)] = a1;
  fam.alpha_forms[VarId::alpha(2)] = a2;
  fam.alpha_forms[VarId::alpha(3)] = (a1 + a2) * Rational(1, 2);
  fam.beta_forms[VarId::beta(2)] = V(VarId::beta(2));
  fam.beta_forms[VarId::beta(1)] = V(VarId::beta(2)) + ((a2 - a1) * Rational(1, 2)).pow(2);
  fam.class_key = "three-root (c)";
  return fam;
}

SolutionFamily case2121_family() {
  SolutionFamily fam;
  fam.spec = CaseSpec::parse_id("n4-t2-nz-inf-b1,2|3,4-l2,1,2,1");
  fam.parameters = {VarId::alpha(1), VarId::alpha(2), VarId::beta(1)};
  MultiPoly a1 = V(VarId::alpha(1)), a2 = V(VarId::alpha(2));
  fam.alpha_forms[VarId::alpha(1)] = a1;
  fam.alpha_forms[VarId::alpha(2)] = a2;
  fam.alpha_forms[VarId::alpha(3)] = (a1 + a2 * Rational(2)) * Rational(1, 3);
  fam.alpha_forms[VarId::alpha(4)] = (a1 * Rational(4) - a2) * Rational(1, 3);
  fam.beta_forms[VarId::beta(1)] = V(VarId::beta(1));
  fam.beta_forms[VarId::beta(2)] = V(VarId::beta(1)) + (a1 - a2).pow(3) * Rational(4, 27);
  fam.class_key = "(2,1,2,1)";
  return fam;
}

// ---- sampling ----

Rational random_small_rational(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<long> num(-10, 10), den(1, 10);
  for (;;) {
    Rational r(num(rng), den(rng));
    if (!nonzero || !r.is_zero()) return r;
  }
}

std::map<VarId, QuadExt> random_params(const SolutionFamily& fam, std::mt19937_64& rng) {
  std::vector<QuadExt> droots;
  bool constrained = fam.d_relation.has_value() || !fam.d_constraints.empty();
  if (constrained) {
    QPoly p;
    if (fam.d_relation) {
      std::vector<Rational> cs(fam.d_relation->degree(VarId::d()) + 1, Rational(0));
      for (const auto& [m, c] : fam.d_relation->terms()) cs[m.degree(VarId::d())] = c;
      p = QPoly(std::move(cs));
    } else {
      const auto& pc = fam.d_constraints.front();
      p = QPoly::monomial(Rational(1), static_cast<std::size_t>(pc.N)) - QPoly(pc.M);
    }
    for (auto& r : small_field_roots(p))
      if (!r.is_zero()) droots.push_back(r);
    if (droots.empty()) throw ConstraintError("no d in Q or a quadratic field satisfies the family's relation");
  }
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::map<VarId, QuadExt> params;
    for (const auto& v : fam.parameters) {
      if (v == VarId::d() && constrained) {
        std::uniform_int_distribution<std::size_t> pick(0, droots.size() - 1);
        params[v] = droots[pick(rng)];
      } else {
        params[v] = QuadExt(random_small_rational(rng, v == VarId::d()));
      }
    }
    try {
      instantiate(fam, params);
      return params;
    } catch (const ConstraintError&) {
    }
  }
  throw ConstraintError("could not draw admissible parameters");
}

std::vector<long> random_k(const CaseSpec& c, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> pick(-3, 3);
  for (;;) {
    std::vector<long> k;
    for (int j = 0; j < c.t; ++j) k.push_back(pick(rng));
    if (admissible_k(c, k)) return k;
  }
}

// ---- roots in small fields ----

namespace {

// s, m with n = s^2 * m and m squarefree (sign kept in m).
std::pair<mpz_class, mpz_class> square_split(const mpz_class& n) {
  mpz_class a = abs(n), s = 1, m = 1;
  for (mpz_class p = 2; p * p <= a; ++p) {
    while (a % (p * p) == 0) {
      a /= p * p;
      s *= p;
    }
    if (a % p == 0) {
      a /= p;
      m *= p;
    }
  }
  m *= a;
  if (n < 0) m = -m;
  return {s, m};
}

// sqrt(e) in Q or Q(sqrt m), m squarefree.
QuadExt quad_sqrt(const Rational& e) {
  if (auto r = e.sqrt()) return QuadExt(*r);
  mpz_class pq = e.num() * e.den();
  auto [s, m] = square_split(pq);
  return QuadExt(Rational(0), Rational(s, e.den()), Rational(m));
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

std::vector<Rational> rational_roots(QPoly p) {
  std::vector<Rational> out;
  if (p.degree() <= 0) return out;
  p = squarefree_part(p);
  if (p.coeff(0).is_zero()) {
    out.push_back(Rational(0));
    p = divrem(p, QPoly::x()).first;
  }
  if (p.degree() <= 0) return out;
  mpz_class L = 1;
  for (const auto& c : p.coeffs()) L = lcm(L, c.den());
  mpz_class a0 = (p.coeff(0) * Rational(L)).num(), an = (p.lead() * Rational(L)).num();
  if (abs(a0) > mpz_class("1000000000000") || abs(an) > mpz_class("1000000000000")) return out;
  auto dp = divisors(a0), dq = divisors(an);
  std::set<Rational> seen;
  for (const auto& u : dp)
    for (const auto& v : dq)
      for (int s : {1, -1}) {
        Rational r(mpz_class(s * u), v);
        if (seen.insert(r).second && p.eval(r).is_zero()) out.push_back(r);
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<QuadExt> small_field_roots(const QPoly& p0) {
  if (p0.is_zero()) throw std::invalid_argument("small_field_roots of the zero polynomial");
  std::vector<QuadExt> out;
  QPoly p = squarefree_part(p0);
  for (const auto& r : rational_roots(p)) {
    out.push_back(QuadExt(r));
    p = divrem(p, QPoly::linear(r)).first;
  }
  if (p.degree() <= 0) return out;
  if (p.degree() == 2) {
    Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    QuadExt sq = quad_sqrt(b * b - Rational(4) * a * c);
    QuadExt base(-b / (Rational(2) * a));
    QuadExt half = sq * QuadExt(Rational(1) / (Rational(2) * a));
    out.push_back(base + half);
    out.push_back(base - half);
    return out;
  }
  // Even polynomial: roots are square roots of roots in x^2.
  bool even = true;
  for (int k = 1; k <= p.degree(); k += 2) even = even && p.coeff(static_cast<std::size_t>(k)).is_zero();
  if (even) {
    std::vector<Rational> half;
    for (int k = 0; k <= p.degree(); k += 2) half.push_back(p.coeff(static_cast<std::size_t>(k)));
    for (const auto& e : rational_roots(QPoly(half))) {
      QuadExt s = quad_sqrt(e);
      if (s.is_rational()) continue;  // already found
      out.push_back(s);
      out.push_back(-s);
    }
  }
  return out;
}

}  // namespace ratcomp
