#include "ratcomp/groebner.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>

namespace ratcomp {

// ---- orders ----

MonomialOrder MonomialOrder::lex(std::vector<VarId> prec) {
  MonomialOrder o;
  o.kind = OrderKind::lex;
  o.precedence = std::move(prec);
  return o;
}

MonomialOrder MonomialOrder::grevlex(std::vector<VarId> prec) {
  MonomialOrder o;
  o.kind = OrderKind::grevlex;
  o.precedence = std::move(prec);
  return o;
}

MonomialOrder MonomialOrder::block_elim(std::vector<VarId> block, std::vector<VarId> prec, OrderKind inner) {
  MonomialOrder o;
  o.kind = OrderKind::block_elim;
  o.block = std::move(block);
  o.precedence = std::move(prec);
  o.inner = inner;
  return o;
}

namespace {

int default_rank(VarId v) {
  switch (v.kind) {
    case VarKind::aux: return v.index;
    case VarKind::dinv: return 100;
    case VarKind::beta: return 200 + v.index;
    case VarKind::dvar: return 300;
    case VarKind::alpha: return 400 + v.index;
    case VarKind::alpha0: return 500;
  }
  return 1000;
}

const char* kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::lex: return "lex";
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::block_elim: return "block-elim";
  }
  return "?";
}

}  // namespace

std::vector<VarId> MonomialOrder::arrange(const std::set<VarId>& vars) const {
  auto key = [&](VarId v) {
    auto it = std::find(precedence.begin(), precedence.end(), v);
    if (it != precedence.end()) return static_cast<int>(it - precedence.begin());
    return 10000 + default_rank(v);
  };
  auto by_key = [&](VarId a, VarId b) { return key(a) < key(b); };
  std::vector<VarId> head, tail;
  for (VarId v : vars) {
    if (kind == OrderKind::block_elim && std::find(block.begin(), block.end(), v) != block.end())
      head.push_back(v);
    else
      tail.push_back(v);
  }
  std::sort(head.begin(), head.end(), by_key);
  std::sort(tail.begin(), tail.end(), by_key);
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

std::string MonomialOrder::str() const {
  std::string s = kind_name(kind);
  if (kind == OrderKind::block_elim) {
    s += "[";
    for (std::size_t i = 0; i < block.size(); ++i) s += (i ? "," : "") + block[i].name();
    s += "]/" + std::string(kind_name(inner));
  }
  if (!precedence.empty()) {
    s += " (";
    for (std::size_t i = 0; i < precedence.size(); ++i) s += (i ? ">" : "") + precedence[i].name();
    s += ")";
  }
  return s;
}

// ---- packed engine ----

namespace {

constexpr std::size_t kMaxVars = 24;
using Exp = std::array<std::uint16_t, kMaxVars>;

struct Term {
  Exp e;
  Rational c;
};
using DPoly = std::vector<Term>;

struct Segment {
  std::size_t end;
  OrderKind kind;
};

struct Ring {
  std::vector<VarId> vars;
  std::vector<Segment> segs;

  std::size_t nvars() const { return vars.size(); }

  static int cmp_range(const Exp& a, const Exp& b, std::size_t lo, std::size_t hi, OrderKind k) {
    if (k == OrderKind::grevlex) {
      unsigned da = 0, db = 0;
      for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da > db ? 1 : -1;
      for (std::size_t i = hi; i-- > lo;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      return 0;
    }
    for (std::size_t i = lo; i < hi; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }

  int cmp(const Exp& a, const Exp& b) const {
    std::size_t lo = 0;
    for (const auto& s : segs) {
      int c = cmp_range(a, b, lo, s.end, s.kind);
      if (c) return c;
      lo = s.end;
    }
    return 0;
  }

  bool divides(const Exp& a, const Exp& b) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  }

  Exp to_exp(const Monomial& m) const {
    Exp e{};
    for (const auto& [v, k] : m.powers()) {
      auto it = std::find(vars.begin(), vars.end(), v);
      if (it == vars.end()) throw std::logic_error("variable outside ring: " + v.name());
      e[static_cast<std::size_t>(it - vars.begin())] = static_cast<std::uint16_t>(k);
    }
    return e;
  }

  Monomial to_monomial(const Exp& e) const {
    Monomial m;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (e[i]) m = m * Monomial(vars[i], e[i]);
    return m;
  }

  DPoly to_dpoly(const MultiPoly& p) const {
    DPoly d;
    d.reserve(p.size());
    for (const auto& [m, c] : p.terms()) d.push_back({to_exp(m), c});
    std::sort(d.begin(), d.end(), [&](const Term& x, const Term& y) { return cmp(x.e, y.e) > 0; });
    return d;
  }

  MultiPoly to_mpoly(const DPoly& d) const {
    MultiPoly p;
    for (const auto& t : d) p.add_term(to_monomial(t.e), t.c);
    return p;
  }
};

Ring make_ring(const MonomialOrder& ord, const std::set<VarId>& vars) {
  Ring r;
  r.vars = ord.arrange(vars);
  if (r.vars.size() > kMaxVars) throw std::length_error("too many variables for the Groebner engine");
  if (ord.kind == OrderKind::block_elim) {
    std::size_t nb = 0;
    for (VarId v : r.vars)
      if (std::find(ord.block.begin(), ord.block.end(), v) != ord.block.end()) ++nb;
    if (nb > 0) r.segs.push_back({nb, ord.inner});
    r.segs.push_back({r.vars.size(), ord.inner});
  } else {
    r.segs.push_back({r.vars.size(), ord.kind});
  }
  return r;
}

// Prepends a single-variable block that dominates everything.
Ring prepend_block(const Ring& base, VarId w) {
  Ring r;
  r.vars.push_back(w);
  r.vars.insert(r.vars.end(), base.vars.begin(), base.vars.end());
  if (r.vars.size() > kMaxVars) throw std::length_error("too many variables for the Groebner engine");
  r.segs.push_back({1, OrderKind::lex});
  for (const auto& s : base.segs) r.segs.push_back({s.end + 1, s.kind});
  return r;
}

std::set<VarId> collect_vars(const std::vector<MultiPoly>& ps) {
  std::set<VarId> s;
  for (const auto& p : ps) {
    auto v = p.variables();
    s.insert(v.begin(), v.end());
  }
  return s;
}

Exp exp_add(const Exp& a, const Exp& b, std::size_t n) {
  Exp r{};
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

Exp exp_sub(const Exp& a, const Exp& b, std::size_t n) {
  Exp r{};
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return r;
}

Exp exp_lcm(const Exp& a, const Exp& b, std::size_t n) {
  Exp r{};
  for (std::size_t i = 0; i < n; ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool exp_coprime(const Exp& a, const Exp& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] && b[i]) return false;
  return true;
}

// p[from..] - c * x^shift * g, merged in order.
DPoly axpy(const Ring& R, const DPoly& p, std::size_t from, const Rational& c, const Exp& shift, const DPoly& g) {
  DPoly r;
  r.reserve(p.size() - from + g.size());
  std::size_t i = from, j = 0;
  std::size_t n = R.nvars();
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      r.push_back(p[i++]);
      continue;
    }
    Exp ge = exp_add(g[j].e, shift, n);
    int s = i < p.size() ? R.cmp(p[i].e, ge) : -1;
    if (s > 0) {
      r.push_back(p[i++]);
    } else if (s < 0) {
      r.push_back({ge, -(c * g[j].c)});
      ++j;
    } else {
      Rational v = p[i].c - c * g[j].c;
      if (!v.is_zero()) r.push_back({ge, std::move(v)});
      ++i;
      ++j;
    }
  }
  return r;
}

void make_monic(DPoly& p) {
  if (p.empty() || p.front().c.is_one()) return;
  Rational inv = p.front().c.inverse();
  for (auto& t : p) t.c *= inv;
}

// Full normal form modulo G (members monic); optional quotient sink.
DPoly normal_form(const Ring& R, DPoly p, const std::vector<DPoly>& G, std::vector<MultiPoly>* quot = nullptr) {
  DPoly rem;
  std::size_t head = 0;
  std::size_t n = R.nvars();
  while (head < p.size()) {
    const Term& lt = p[head];
    std::size_t k = 0;
    for (; k < G.size(); ++k)
      if (!G[k].empty() && R.divides(G[k].front().e, lt.e)) break;
    if (k == G.size()) {
      rem.push_back(lt);
      ++head;
      continue;
    }
    Rational c = lt.c / G[k].front().c;
    Exp shift = exp_sub(lt.e, G[k].front().e, n);
    if (quot) (*quot)[k].add_term(R.to_monomial(shift), c);
    p = axpy(R, p, head, c, shift, G[k]);
    head = 0;
  }
  return rem;
}

DPoly spoly_packed(const Ring& R, const DPoly& f, const DPoly& g) {
  std::size_t n = R.nvars();
  Exp l = exp_lcm(f.front().e, g.front().e, n);
  Exp sf = exp_sub(l, f.front().e, n);
  Exp sg = exp_sub(l, g.front().e, n);
  DPoly a;
  a.reserve(f.size());
  Rational cf = f.front().c.inverse();
  for (const auto& t : f) a.push_back({exp_add(t.e, sf, n), t.c * cf});
  return axpy(R, a, 0, g.front().c.inverse(), sg, g);
}

bool is_const(const DPoly& p) {
  if (p.size() != 1) return false;
  for (auto x : p.front().e)
    if (x) return false;
  return true;
}

std::vector<DPoly> groebner_packed(const Ring& R, const std::vector<DPoly>& gens) {
  std::size_t n = R.nvars();
  std::vector<DPoly> G;
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add = [&](DPoly h) {
    make_monic(h);
    std::size_t idx = G.size();
    G.push_back(std::move(h));
    for (std::size_t i = 0; i < idx; ++i) {
      queue.emplace_back(i, idx);
      pending.emplace(i, idx);
    }
  };
  auto unit = [] {
    Term t{Exp{}, Rational(1)};
    return std::vector<DPoly>{DPoly{t}};
  };
  for (const auto& g : gens) {
    DPoly h = normal_form(R, g, G);
    if (h.empty()) continue;
    if (is_const(h)) return unit();
    add(std::move(h));
  }
  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };
  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    pending.erase({i, j});
    const Exp& li = G[i].front().e;
    const Exp& lj = G[j].front().e;
    if (exp_coprime(li, lj, n)) continue;
    Exp l = exp_lcm(li, lj, n);
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (R.divides(G[k].front().e, l) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    }
    if (chain) continue;
    DPoly h = normal_form(R, spoly_packed(R, G[i], G[j]), G);
    if (h.empty()) continue;
    if (is_const(h)) return unit();
    add(std::move(h));
  }
  // Minimalise, inter-reduce, sort.
  std::vector<DPoly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
      if (k == i) continue;
      if (R.divides(G[k].front().e, G[i].front().e)) {
        // Equal leading monomials: keep the earliest.
        bool same = R.cmp(G[k].front().e, G[i].front().e) == 0;
        redundant = !same || k < i;
      }
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::vector<DPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<DPoly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    DPoly lead{minimal[i].front()};
    DPoly tail(minimal[i].begin() + 1, minimal[i].end());
    DPoly r = normal_form(R, tail, others);
    lead.insert(lead.end(), r.begin(), r.end());
    make_monic(lead);
    reduced.push_back(std::move(lead));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const DPoly& a, const DPoly& b) { return R.cmp(a.front().e, b.front().e) > 0; });
  return reduced;
}

std::vector<DPoly> to_packed(const Ring& R, const std::vector<MultiPoly>& ps) {
  std::vector<DPoly> out;
  for (const auto& p : ps)
    if (!p.is_zero()) out.push_back(R.to_dpoly(p));
  return out;
}

std::vector<MultiPoly> from_packed(const Ring& R, const std::vector<DPoly>& ps) {
  std::vector<MultiPoly> out;
  for (const auto& p : ps) out.push_back(R.to_mpoly(p));
  return out;
}

VarId fresh_aux(const std::set<VarId>& used) {
  int k = 1;
  for (VarId v : used)
    if (v.kind == VarKind::aux) k = std::max(k, v.index + 1);
  return VarId::aux(k);
}

bool free_of(const DPoly& p, std::size_t var) {
  for (const auto& t : p)
    if (t.e[var]) return false;
  return true;
}

}  // namespace

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const {
  std::set<VarId> vars;
  for (const auto& pe : a.powers()) vars.insert(pe.first);
  for (const auto& pe : b.powers()) vars.insert(pe.first);
  Ring R = make_ring(*this, vars);
  return R.cmp(R.to_exp(a), R.to_exp(b)) > 0;
}

Monomial leading_monomial(const MultiPoly& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw std::domain_error("leading monomial of zero");
  Ring R = make_ring(ord, p.variables());
  return R.to_monomial(R.to_dpoly(p).front().e);
}

Rational leading_coefficient(const MultiPoly& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw std::domain_error("leading coefficient of zero");
  Ring R = make_ring(ord, p.variables());
  return R.to_dpoly(p).front().c;
}

MultiPoly spoly(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& ord) {
  Ring R = make_ring(ord, collect_vars({f, g}));
  return R.to_mpoly(spoly_packed(R, R.to_dpoly(f), R.to_dpoly(g)));
}

Reduction reduce_with_quotients(const MultiPoly& p, const std::vector<MultiPoly>& basis, const MonomialOrder& ord) {
  auto vars = collect_vars(basis);
  auto pv = p.variables();
  vars.insert(pv.begin(), pv.end());
  Ring R = make_ring(ord, vars);
  std::vector<DPoly> G;
  for (const auto& b : basis) {
    if (b.is_zero()) throw std::invalid_argument("reduce: zero basis member");
    G.push_back(R.to_dpoly(b));
  }
  Reduction out;
  out.quotients.assign(basis.size(), MultiPoly());
  out.remainder = R.to_mpoly(normal_form(R, R.to_dpoly(p), G, &out.quotients));
  return out;
}

MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& basis, const MonomialOrder& ord) {
  auto vars = collect_vars(basis);
  auto pv = p.variables();
  vars.insert(pv.begin(), pv.end());
  Ring R = make_ring(ord, vars);
  std::vector<DPoly> G = to_packed(R, basis);
  return R.to_mpoly(normal_form(R, R.to_dpoly(p), G));
}

std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& ord) {
  Ring R = make_ring(ord, collect_vars(gens));
  return from_packed(R, groebner_packed(R, to_packed(R, gens)));
}

bool is_unit_ideal(const std::vector<MultiPoly>& gb) {
  for (const auto& g : gb)
    if (g.is_constant() && !g.is_zero()) return true;
  return false;
}

bool in_ideal(const MultiPoly& p, const std::vector<MultiPoly>& gb, const MonomialOrder& ord) {
  return reduce(p, gb, ord).is_zero();
}

bool same_ideal(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b, const MonomialOrder& ord) {
  auto ga = buchberger(a, ord);
  auto gb = buchberger(b, ord);
  for (const auto& p : a)
    if (!in_ideal(p, gb, ord)) return false;
  for (const auto& p : b)
    if (!in_ideal(p, ga, ord)) return false;
  return true;
}

std::vector<MultiPoly> saturate(const std::vector<MultiPoly>& gens, const MultiPoly& f, const MonomialOrder& ord) {
  auto vars = collect_vars(gens);
  auto fv = f.variables();
  vars.insert(fv.begin(), fv.end());
  if (f.is_zero()) return {MultiPoly(1)};
  VarId w = fresh_aux(vars);
  Ring base = make_ring(ord, vars);
  Ring R = prepend_block(base, w);
  std::vector<DPoly> packed = to_packed(R, gens);
  packed.push_back(R.to_dpoly(MultiPoly(w) * f - MultiPoly(1)));
  auto gb = groebner_packed(R, packed);
  std::vector<MultiPoly> out;
  for (const auto& g : gb)
    if (free_of(g, 0)) out.push_back(R.to_mpoly(g));
  return out;
}

std::vector<MultiPoly> saturate_all(std::vector<MultiPoly> gens, const std::vector<MultiPoly>& fs,
                                    const MonomialOrder& ord) {
  for (const auto& f : fs) {
    gens = saturate(gens, f, ord);
    if (is_unit_ideal(gens)) break;
  }
  return gens;
}

std::vector<MultiPoly> eliminate(const std::vector<MultiPoly>& gens, const std::vector<VarId>& drop,
                                 const EliminateOptions& opt) {
  MonomialOrder ord = MonomialOrder::block_elim(drop, opt.precedence, opt.inner);
  std::vector<MultiPoly> basis = opt.saturate_by.empty() ? buchberger(gens, ord) : saturate_all(gens, opt.saturate_by, ord);
  std::vector<MultiPoly> out;
  for (const auto& g : basis) {
    bool keep = true;
    for (VarId v : drop)
      if (g.involves(v)) keep = false;
    if (keep) out.push_back(g);
  }
  return out;
}

std::vector<MultiPoly> pairwise_differences(const std::vector<VarId>& vars) {
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j) out.push_back(MultiPoly(vars[i]) - MultiPoly(vars[j]));
  return out;
}

LinearSolution linear_solve(const std::vector<MultiPoly>& gens, const std::vector<VarId>& unknowns) {
  const std::size_t nu = unknowns.size();
  struct Row {
    std::vector<Rational> a;
    MultiPoly rest;
  };
  std::vector<Row> rows;
  for (const auto& g : gens) {
    Row r{std::vector<Rational>(nu, Rational(0)), MultiPoly()};
    for (const auto& [m, c] : g.terms()) {
      std::size_t hit = nu;
      for (std::size_t u = 0; u < nu; ++u) {
        unsigned e = m.degree(unknowns[u]);
        if (e == 0) continue;
        if (e > 1 || hit != nu || m.powers().size() != 1)
          throw std::invalid_argument("linear_solve: generator not linear with constant coefficients: " + g.str());
        hit = u;
      }
      if (hit == nu)
        r.rest.add_term(m, c);
      else
        r.a[hit] += c;
    }
    rows.push_back(std::move(r));
  }
  LinearSolution sol;
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < nu && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p].a[col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    Rational inv = rows[rank].a[col].inverse();
    for (auto& x : rows[rank].a) x *= inv;
    rows[rank].rest = rows[rank].rest * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r].a[col].is_zero()) continue;
      Rational f = rows[r].a[col];
      for (std::size_t k = 0; k < nu; ++k) rows[r].a[k] -= f * rows[rank].a[k];
      rows[r].rest -= rows[rank].rest * f;
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(nu, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t u = 0; u < nu; ++u)
    if (!is_pivot[u]) sol.free_unknowns.push_back(unknowns[u]);
  for (std::size_t r = 0; r < rank; ++r) {
    MultiPoly form = -rows[r].rest;
    for (std::size_t u = 0; u < nu; ++u)
      if (!is_pivot[u] && !rows[r].a[u].is_zero()) form -= MultiPoly(unknowns[u]) * rows[r].a[u];
    sol.solved[unknowns[pivot_col[r]]] = form;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r].rest.is_zero()) continue;
    if (rows[r].rest.is_constant()) {
      sol.consistent = false;
    } else {
      sol.relations.push_back(rows[r].rest.primitive());
    }
  }
  return sol;
}

bool satisfies_buchberger_criterion(const std::vector<MultiPoly>& gb, const MonomialOrder& ord) {
  Ring R = make_ring(ord, collect_vars(gb));
  std::vector<DPoly> G = to_packed(R, gb);
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!normal_form(R, spoly_packed(R, G[i], G[j]), G).empty()) return false;
  return true;
}

}  // namespace ratcomp
