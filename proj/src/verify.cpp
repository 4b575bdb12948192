#include "ratcomp/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "ratcomp/apclassify.hpp"

namespace ratcomp {

bool DemoResult::ok() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const DemoCheck& c) { return c.ok; });
}

std::string DemoResult::str() const {
  std::ostringstream os;
  os << "demo " << name << "\n";
  for (const auto& w : witnesses) {
    os << "  witness [" << w.provenance() << ", " << w.field_name() << "]\n";
    os << "    f = " << w.f().str() << "\n    g = " << w.g().str() << "\n    h = " << w.h().str() << "\n";
  }
  for (const auto& c : checks) os << "  " << (c.ok ? "ok   " : "FAIL ") << c.label << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  os << (ok() ? "all checks passed" : "some checks failed") << "\n";
  return os.str();
}

// ---- three-root instances (a), (b), (c) ----

FactoredForm<Rational> thm2a_instance(const Rational& a1, long k1, long k2) {
  FactoredForm<Rational> f;
  f.add(a1, static_cast<int>(k1));
  f.add(a1 - Rational(1, 4), static_cast<int>(2 * k2));
  f.add(a1 + Rational(1, 4), static_cast<int>(-2 * k1 - 2 * k2));
  return f;
}

FactoredForm<Rational> thm2b_instance(const Rational& a1, const Rational& a2, long k1, long k2) {
  FactoredForm<Rational> f;
  f.add(a1, static_cast<int>(2 * k1));
  f.add(Rational(2) * a2 - a1, static_cast<int>(2 * k2));
  f.add(a2, static_cast<int>(-2 * k1 - 2 * k2));
  return f;
}

FactoredForm<Rational> thm2c_instance(const Rational& a1, const Rational& a2, long k1, long k2) {
  FactoredForm<Rational> f;
  f.add((a1 + a2) / Rational(2), static_cast<int>(2 * k1));
  f.add(a1, static_cast<int>(k2));
  f.add(a2, static_cast<int>(k2));
  return f;
}

// ---- oracle ----

namespace {

FactoredForm<QuadExt> lift(const FactoredForm<Rational>& f) {
  FactoredForm<QuadExt> out;
  for (const auto& fc : f.factors()) out.add(QuadExt(fc.root), fc.exponent);
  return out;
}

std::vector<long> divisors_of(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

struct Candidate {
  CaseSpec spec;
  std::vector<long> k;
};

// All (partition, k, l) with l_m k_j = f_m; S_inf members satisfy -l_m sum(k) = f_m.
std::vector<Candidate> candidate_cases(const std::vector<int>& e, int max_deg_h) {
  const int n = static_cast<int>(e.size());
  std::vector<Candidate> out;
  std::vector<int> lab(static_cast<std::size_t>(n), -1);
  std::function<void(int, int)> rec = [&](int m, int used) {
    if (m == n) {
      if (used < 2) return;
      CaseSpec c;
      c.n = n;
      c.t = used;
      c.blocks.assign(static_cast<std::size_t>(used), {});
      for (int i = 0; i < n; ++i) {
        if (lab[static_cast<std::size_t>(i)] < 0)
          c.s_inf.push_back(i + 1);
        else
          c.blocks[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])].push_back(i + 1);
      }
      std::vector<std::vector<long>> kopts;
      for (const auto& b : c.blocks) {
        int sign = e[static_cast<std::size_t>(b[0] - 1)] > 0 ? 1 : -1;
        long g = 0;
        for (int m2 : b) {
          int v = e[static_cast<std::size_t>(m2 - 1)];
          if ((v > 0 ? 1 : -1) != sign) return;
          g = std::gcd(g, static_cast<long>(std::abs(v)));
        }
        std::vector<long> ks;
        for (long d : divisors_of(g)) ks.push_back(sign * d);
        kopts.push_back(ks);
      }
      std::vector<std::size_t> idx(kopts.size(), 0);
      for (;;) {
        std::vector<long> k;
        for (std::size_t j = 0; j < idx.size(); ++j) k.push_back(kopts[j][idx[j]]);
        long K = std::accumulate(k.begin(), k.end(), 0L);
        bool ok = !(K == 0 && (used < 3 || !c.s_inf.empty()));
        CaseSpec cc = c;
        cc.ksum_zero = K == 0;
        cc.l.assign(static_cast<std::size_t>(n), 0);
        for (int i = 0; ok && i < n; ++i) {
          int b = lab[static_cast<std::size_t>(i)];
          long v = e[static_cast<std::size_t>(i)];
          if (b >= 0) {
            cc.l[static_cast<std::size_t>(i)] = static_cast<int>(v / k[static_cast<std::size_t>(b)]);
          } else if (K != 0 && (-v) % K == 0 && -v / K > 0) {
            cc.l[static_cast<std::size_t>(i)] = static_cast<int>(-v / K);
          } else {
            ok = false;
          }
        }
        if (ok && cc.deg_h() >= 2 && cc.deg_h() <= max_deg_h) out.push_back({cc, k});
        std::size_t j = 0;
        while (j < idx.size() && ++idx[j] == kopts[j].size()) idx[j++] = 0;
        if (j == idx.size()) break;
      }
      return;
    }
    for (int b = -1; b <= used; ++b) {
      lab[static_cast<std::size_t>(m)] = b;
      rec(m + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

KRatFun omega_k(const CaseSpec& c, const std::vector<int>& members, const std::vector<QuadExt>& alpha) {
  KPoly p(QuadExt(1));
  for (int m : members)
    p = p * KPoly::linear(alpha[static_cast<std::size_t>(m - 1)]).pow(static_cast<unsigned>(c.l_of(m)));
  return KRatFun(p);
}

}  // namespace

std::vector<DecompositionWitness> brute_force_decompose(const FactoredForm<QuadExt>& f, int max_deg_h) {
  const auto& fs = f.factors();
  if (fs.size() > 6) throw std::invalid_argument("brute_force_decompose: more than 6 zeros and poles");
  if (fs.size() < 2) throw std::invalid_argument("brute_force_decompose: need at least 2 zeros and poles");
  std::vector<QuadExt> alpha;
  std::vector<int> e;
  for (const auto& fc : fs) {
    alpha.push_back(fc.root);
    e.push_back(fc.exponent);
  }
  const KRatFun F = f.expand();
  std::vector<DecompositionWitness> out;
  std::set<std::string> seen;
  for (const auto& cand : candidate_cases(e, max_deg_h)) {
    const CaseSpec& c = cand.spec;
    KRatFun h;
    if (!c.ksum_zero) {
      h = omega_k(c, c.blocks[0], alpha) / omega_k(c, c.s_inf, alpha);
    } else {
      KRatFun w1 = omega_k(c, c.blocks[0], alpha), w2 = omega_k(c, c.blocks[1], alpha);
      if ((w1 - w2).is_zero()) continue;
      h = w1 / (w1 - w2);
    }
    if (h.degree() < 2 || h.degree() > max_deg_h) continue;
    // b_j is the value of h on block j.
    std::vector<QuadExt> beta;
    bool ok = true;
    for (const auto& b : c.blocks) {
      const QuadExt& a = alpha[static_cast<std::size_t>(b[0] - 1)];
      if (h.denom().eval(a).is_zero()) {
        ok = false;
        break;
      }
      beta.push_back(h.eval(a));
    }
    for (std::size_t i = 0; ok && i < beta.size(); ++i)
      for (std::size_t j = i + 1; ok && j < beta.size(); ++j) ok = !(beta[i] == beta[j]);
    if (!ok) continue;
    KRatFun g(KPoly(QuadExt(1)));
    for (std::size_t j = 0; j < beta.size(); ++j)
      g = g * KRatFun(KPoly::linear(beta[j])).pow(static_cast<int>(cand.k[j]));
    KRatFun ratio = F / compose(g, h);
    if (!ratio.is_constant()) continue;
    g = g * ratio;
    std::string key = g.str() + " | " + h.str();
    if (!seen.insert(key).second) continue;
    try {
      out.push_back(DecompositionWitness::make(F, g, h, c.id()));
    } catch (const VerificationError&) {
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const DecompositionWitness& a, const DecompositionWitness& b) {
    return std::make_pair(a.h().degree(), a.provenance()) < std::make_pair(b.h().degree(), b.provenance());
  });
  return out;
}

std::vector<DecompositionWitness> brute_force_decompose(const FactoredForm<Rational>& f, int max_deg_h) {
  return brute_force_decompose(lift(f), max_deg_h);
}

// ---- demos ----

std::vector<std::string> demo_names() { return {"gutierrez-sevilla", "ayad", "prop1", "thm2a", "thm2b", "thm2c"}; }

namespace {

KRatFun K(const std::string& s) { return parse_rational_function<QuadExt>(s); }

void check(DemoResult& r, std::string label, bool ok, std::string detail = "") {
  r.checks.push_back({std::move(label), ok, std::move(detail)});
}

void add_witness(DemoResult& r, const std::string& label, const KRatFun& f, const KRatFun& g, const KRatFun& h) {
  try {
    r.witnesses.push_back(DecompositionWitness::make(f, g, h, r.name + ": " + label));
    check(r, label + " composes to f", true);
  } catch (const VerificationError& e) {
    check(r, label + " composes to f", false, e.what());
  }
}

int half_degree(const KRatFun& f) { return std::max(2, f.degree() / 2); }

void oracle(DemoResult& r, const FactoredForm<Rational>& f) {
  auto ws = brute_force_decompose(f, half_degree(expand(lift(f))));
  check(r, "oracle finds a decomposition of " + f.str(), !ws.empty(),
        std::to_string(ws.size()) + " witness(es)");
  for (auto& w : ws) r.witnesses.push_back(std::move(w));
}

}  // namespace

DemoResult run_demo(const std::string& name) {
  DemoResult r;
  r.name = name;
  if (name == "ayad") {
    add_witness(r, "g(h)", K("(x^4-8*x)/(x^3+1)"), K("(x^2+4*x)/(x+1)"), K("(x^2-2*x)/(x+1)"));
  } else if (name == "gutierrez-sevilla") {
    KRatFun f = K("x^3*(x+6)^3*(x^2-6*x+36)^3/((x-3)^3*(x^2+3*x+9)^3)");
    KRatFun g1 = K("x^3"), g2 = K("x*(x-12)/(x-3)"), g3 = K("x*(x+6)/(x-3)");
    KRatFun h1 = K("x^3*(x+24)/(x-3)"), h2 = K("x*(x^2-6*x+36)/(x^2+3*x+9)");
    add_witness(r, "g1(g2(g3))", f, compose(g1, g2), g3);
    add_witness(r, "g1(g2(g3)) regrouped", f, g1, compose(g2, g3));
    add_witness(r, "h1(h2)", f, h1, h2);
    int cnt = count_zeros_poles(f);
    check(r, "f has 7 zeros and poles", cnt == 7, std::to_string(cnt));
  } else if (name == "prop1") {
    std::map<VarId, QuadExt> p{{VarId::alpha0(), QuadExt(0)}, {VarId::d(), QuadExt(1)}, {VarId::beta(1), QuadExt(0)}};
    try {
      auto w = verify_family(prop1_family(), p, {1, 1}, "prop1");
      check(r, "f = x(x-1)(x-2)(x-3)", equal(w.f(), K("x*(x-1)*(x-2)*(x-3)")), w.f().str());
      check(r, "g = x(x+2)", equal(w.g(), K("x*(x+2)")), w.g().str());
      check(r, "h = x^2-3x", equal(w.h(), K("x^2-3*x")), w.h().str());
      r.witnesses.push_back(w);
    } catch (const std::exception& e) {
      check(r, "family verifies", false, e.what());
    }
  } else if (name == "thm2a") {
    oracle(r, thm2a_instance(Rational(0), 2, 1));
  } else if (name == "thm2b") {
    oracle(r, thm2b_instance(Rational(0), Rational(1), 1, 1));
  } else if (name == "thm2c") {
    std::map<VarId, QuadExt> p{{VarId::alpha(1), QuadExt(0)}, {VarId::alpha(2), QuadExt(2)}, {VarId::beta(2), QuadExt(0)}};
    try {
      // middle root carries 2*k1 in the closed form: block {1,2} gets k2, block {3} gets k1
      auto w = verify_family(thm2c_family(), p, {1, 2}, "thm2c");
      KRatFun want = expand(lift(thm2c_instance(Rational(0), Rational(2), 2, 1)));
      check(r, "f = (x-1)^4 x (x-2)", equal(w.f(), want), w.f().str());
      r.witnesses.push_back(w);
    } catch (const std::exception& e) {
      check(r, "family verifies", false, e.what());
    }
  } else {
    throw std::invalid_argument("unknown demo '" + name + "'");
  }
  return r;
}

}  // namespace ratcomp
