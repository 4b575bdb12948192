#include "ratcomp/casegen.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ratcomp {

int CaseSpec::block_sum(std::size_t j) const {
  int s = 0;
  for (int m : blocks[j]) s += l_of(m);
  return s;
}

int CaseSpec::inf_sum() const {
  int s = 0;
  for (int m : s_inf) s += l_of(m);
  return s;
}

int CaseSpec::deg_h() const {
  int d = 0;
  for (std::size_t j = 0; j < blocks.size(); ++j) d = std::max(d, block_sum(j));
  if (!ksum_zero) d = std::max(d, inf_sum());
  return d;
}

int CaseSpec::block_of(int m) const {
  for (std::size_t j = 0; j < blocks.size(); ++j)
    if (std::find(blocks[j].begin(), blocks[j].end(), m) != blocks[j].end()) return static_cast<int>(j);
  return -1;
}

int CaseSpec::nonzero_exponents() const {
  return static_cast<int>(std::count_if(l.begin(), l.end(), [](int v) { return v != 0; }));
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<int> split_ints(std::string_view s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string tok(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (tok.empty()) throw ParseError("bad integer list '" + std::string(s) + "'");
    out.push_back(std::stoi(tok));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string CaseSpec::id() const {
  std::string s = "n" + std::to_string(n) + "-t" + std::to_string(t) + (ksum_zero ? "-z" : "-nz");
  s += "-inf" + join(s_inf) + "-b";
  for (std::size_t j = 0; j < blocks.size(); ++j) s += (j ? "|" : "") + join(blocks[j]);
  s += "-l" + join(l);
  return s;
}

CaseSpec CaseSpec::parse_id(std::string_view id) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : id) {
    if (ch == '-') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  auto bad = [&] { return ParseError("bad case id '" + std::string(id) + "'"); };
  if (parts.size() != 6) throw bad();
  CaseSpec c;
  try {
    if (parts[0][0] != 'n' || parts[1][0] != 't') throw bad();
    c.n = std::stoi(parts[0].substr(1));
    c.t = std::stoi(parts[1].substr(1));
    if (parts[2] != "z" && parts[2] != "nz") throw bad();
    c.ksum_zero = parts[2] == "z";
    if (parts[3].rfind("inf", 0) != 0 || parts[4][0] != 'b' || parts[5][0] != 'l') throw bad();
    c.s_inf = split_ints(std::string_view(parts[3]).substr(3));
    std::string_view bs = std::string_view(parts[4]).substr(1);
    std::size_t start = 0;
    for (;;) {
      std::size_t bar = bs.find('|', start);
      c.blocks.push_back(split_ints(bs.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start)));
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
    c.l = split_ints(std::string_view(parts[5]).substr(1));
  } catch (const std::invalid_argument&) {
    throw bad();
  }
  c.validate();
  return c;
}

void CaseSpec::validate() const {
  auto fail = [&](const std::string& why) { throw std::invalid_argument("invalid case " + id() + ": " + why); };
  if (n < 3) fail("n < 3");
  if (t < 2) fail("t < 2");
  if (static_cast<int>(blocks.size()) != t) fail("block count differs from t");
  if (static_cast<int>(l.size()) != n) fail("exponent tuple length differs from n");
  for (int v : l)
    if (v < 0 || v > n - 1) fail("exponent outside {0..n-1}");
  if (ksum_zero && !s_inf.empty()) fail("zero k-sum requires empty S_inf");
  if (ksum_zero && t < 3) fail("zero k-sum requires t >= 3");
  std::vector<int> seen;
  auto take = [&](const std::vector<int>& b, bool allow_empty) {
    if (b.empty() && !allow_empty) fail("empty block");
    if (!std::is_sorted(b.begin(), b.end())) fail("block not sorted");
    for (int m : b) {
      if (m < 1 || m > n) fail("element outside {1..n}");
      seen.push_back(m);
    }
  };
  take(s_inf, true);
  for (const auto& b : blocks) take(b, false);
  std::sort(seen.begin(), seen.end());
  if (static_cast<int>(seen.size()) != n || std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    fail("blocks do not partition {1..n}");
}

bool operator<(const CaseSpec& a, const CaseSpec& b) {
  return std::tie(a.n, a.t, a.ksum_zero, a.s_inf, a.blocks, a.l) <
         std::tie(b.n, b.t, b.ksum_zero, b.s_inf, b.blocks, b.l);
}

std::string to_string(SinfMode m) {
  switch (m) {
    case SinfMode::empty: return "empty";
    case SinfMode::nonempty: return "nonempty";
    case SinfMode::any: return "any";
  }
  return "?";
}

std::string to_string(CapMode m) {
  switch (m) {
    case CapMode::n_minus_block: return "n-|block|";
    case CapMode::n_minus_one: return "n-1";
    case CapMode::degree_bound: return "degree-bound";
  }
  return "?";
}

SinfMode parse_sinf_mode(std::string_view s) {
  if (s == "empty") return SinfMode::empty;
  if (s == "nonempty") return SinfMode::nonempty;
  if (s == "any") return SinfMode::any;
  throw ParseError("S_inf mode must be empty|nonempty|any");
}

EnumConfig EnumConfig::calibrated() { return EnumConfig{}; }

EnumConfig EnumConfig::exhaustive() {
  EnumConfig c;
  c.ordered_blocks = false;
  c.gcd_filter = false;
  c.cap = CapMode::n_minus_one;
  c.min_deg_h = 0;
  c.degree_bound = false;
  c.feasibility = false;
  return c;
}

std::string EnumConfig::str() const {
  std::ostringstream os;
  os << (ordered_blocks ? "ordered" : "unordered") << " blocks, gcd filter " << (gcd_filter ? "on" : "off")
     << ", cap " << to_string(cap) << ", min deg h " << min_deg_h << ", degree bound "
     << (degree_bound ? "on" : "off") << ", feasibility " << (feasibility ? "on" : "off");
  return os.str();
}

bool degree_feasible(const CaseSpec& c) {
  std::vector<int> s;
  for (std::size_t j = 0; j < c.blocks.size(); ++j) s.push_back(c.block_sum(j));
  if (c.ksum_zero) {
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        for (std::size_t e = b + 1; e < s.size(); ++e) {
          int mx = std::max({s[a], s[b], s[e]});
          int hits = (s[a] == mx) + (s[b] == mx) + (s[e] == mx);
          if (hits < 2) return false;
        }
    return true;
  }
  if (c.s_inf.empty()) return std::adjacent_find(s.begin(), s.end(), std::not_equal_to<>()) == s.end();
  int si = c.inf_sum();
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (s[a] == s[b]) {
        if (si >= s[a]) return false;
      } else if (std::max(s[a], s[b]) != si) {
        return false;
      }
    }
  return true;
}

namespace {

// All ordered partitions of `elems` into t nonempty blocks.
std::vector<std::vector<std::vector<int>>> ordered_partitions(const std::vector<int>& elems, int t) {
  std::vector<std::vector<std::vector<int>>> out;
  std::size_t k = elems.size();
  if (static_cast<int>(k) < t) return out;
  std::vector<int> lab(k, 0);
  for (;;) {
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(t));
    for (std::size_t i = 0; i < k; ++i) blocks[static_cast<std::size_t>(lab[i])].push_back(elems[i]);
    if (std::none_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.empty(); })) out.push_back(blocks);
    std::size_t i = 0;
    while (i < k && lab[i] == t - 1) lab[i++] = 0;
    if (i == k) break;
    ++lab[i];
  }
  return out;
}

}  // namespace

std::vector<CaseSpec> enum_cases(int n, int t, bool ksum_zero, SinfMode mode, const EnumConfig& cfg) {
  if (n < 3) throw std::invalid_argument("enum_cases: n must be at least 3");
  if (t < 2 || t > n) throw std::invalid_argument("enum_cases: t must lie in [2, n]");
  if (ksum_zero && t < 3) throw std::invalid_argument("enum_cases: zero k-sum needs t >= 3");
  if (n > 8) throw std::invalid_argument("enum_cases: n > 8 is not supported");
  if (ksum_zero && mode == SinfMode::nonempty) return {};

  std::vector<std::vector<int>> sinfs;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int m = 1; m <= n; ++m)
      if (mask & (1u << (m - 1))) s.push_back(m);
    if (s.empty() && mode == SinfMode::nonempty) continue;
    if (!s.empty() && (mode == SinfMode::empty || ksum_zero)) continue;
    if (static_cast<int>(s.size()) > n - t) continue;
    sinfs.push_back(s);
  }

  const int bound = (n - 1) / std::max(t - 2, 1);
  std::set<CaseSpec> out;
  for (const auto& sinf : sinfs) {
    std::vector<int> rest;
    for (int m = 1; m <= n; ++m)
      if (!std::binary_search(sinf.begin(), sinf.end(), m)) rest.push_back(m);
    for (auto blocks : ordered_partitions(rest, t)) {
      if (!cfg.ordered_blocks) std::sort(blocks.begin(), blocks.end());
      std::vector<int> cap(static_cast<std::size_t>(n), n - 1);
      auto set_cap = [&](const std::vector<int>& b) {
        int c = n - 1;
        if (cfg.cap == CapMode::n_minus_block) c = n - static_cast<int>(b.size());
        if (cfg.cap == CapMode::degree_bound) c = bound;
        for (int m : b) cap[static_cast<std::size_t>(m - 1)] = std::min(c, n - 1);
      };
      set_cap(sinf);
      for (const auto& b : blocks) set_cap(b);

      CaseSpec c;
      c.n = n;
      c.t = t;
      c.ksum_zero = ksum_zero;
      c.s_inf = sinf;
      c.blocks = blocks;
      c.l.assign(static_cast<std::size_t>(n), 0);
      for (;;) {
        bool keep = true;
        int dh = c.deg_h();
        if (dh < cfg.min_deg_h) keep = false;
        if (keep && cfg.degree_bound && dh > bound) keep = false;
        if (keep && cfg.gcd_filter && std::accumulate(c.l.begin(), c.l.end(), 0, std::gcd<int, int>) != 1)
          keep = false;
        if (keep && cfg.feasibility && !degree_feasible(c)) keep = false;
        if (keep) out.insert(c);
        std::size_t i = 0;
        while (i < c.l.size() && c.l[i] == cap[i]) c.l[i++] = 0;
        if (i == c.l.size()) break;
        ++c.l[i];
      }
    }
  }
  return {out.begin(), out.end()};
}

// ---- systems ----

std::vector<VarId> alpha_vars(int n) {
  std::vector<VarId> v;
  for (int i = 1; i <= n; ++i) v.push_back(VarId::alpha(i));
  return v;
}

std::vector<VarId> beta_vars(int t) {
  std::vector<VarId> v;
  for (int j = 1; j <= t; ++j) v.push_back(VarId::beta(j));
  return v;
}

namespace {

XPoly mul_linear(const XPoly& p, const MultiPoly& root) {
  XPoly r(p.size() + 1);
  for (std::size_t k = 0; k < p.size(); ++k) {
    r[k + 1] += p[k];
    r[k] -= p[k] * root;
  }
  return r;
}

XPoly xsub(XPoly a, const XPoly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  return a;
}

XPoly xadd(XPoly a, const XPoly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) a[k] += b[k];
  return a;
}

XPoly xscale(const XPoly& a, const MultiPoly& s) {
  XPoly r;
  for (const auto& c : a) r.push_back(c * s);
  return r;
}

void emit(const XPoly& p, std::vector<MultiPoly>& gens) {
  for (std::size_t k = p.size(); k-- > 0;)
    if (!p[k].is_zero()) gens.push_back(p[k]);
}

}  // namespace

XPoly omega(const CaseSpec& c, const std::vector<int>& members) {
  XPoly p{MultiPoly(1)};
  for (int m : members)
    for (int e = 0; e < c.l_of(m); ++e) p = mul_linear(p, MultiPoly(VarId::alpha(m)));
  return p;
}

XPoly omega_block(const CaseSpec& c, std::size_t j) { return omega(c, c.blocks[j]); }
XPoly omega_inf(const CaseSpec& c) { return omega(c, c.s_inf); }

EquationSystem build_system_nonzero(const CaseSpec& c) {
  if (c.ksum_zero) throw std::invalid_argument("build_system_nonzero: case has zero k-sum");
  EquationSystem sys{c, {}};
  XPoly q = omega_inf(c);
  for (std::size_t i = 0; i < c.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < c.blocks.size(); ++j) {
      MultiPoly db = MultiPoly(VarId::beta(static_cast<int>(j + 1))) - MultiPoly(VarId::beta(static_cast<int>(i + 1)));
      emit(xsub(xsub(omega_block(c, i), omega_block(c, j)), xscale(q, db)), sys.gens);
    }
  return sys;
}

EquationSystem build_system_zero(const CaseSpec& c) {
  if (!c.ksum_zero) throw std::invalid_argument("build_system_zero: case has nonzero k-sum");
  if (c.t < 3) throw std::invalid_argument("build_system_zero: t < 3");
  EquationSystem sys{c, {}};
  auto b = [](std::size_t j) { return MultiPoly(VarId::beta(static_cast<int>(j + 1))); };
  for (std::size_t j1 = 0; j1 < c.blocks.size(); ++j1)
    for (std::size_t j2 = j1 + 1; j2 < c.blocks.size(); ++j2)
      for (std::size_t j3 = j2 + 1; j3 < c.blocks.size(); ++j3) {
        XPoly v = xscale(omega_block(c, j3), b(j1) - b(j2));
        v = xadd(v, xscale(omega_block(c, j2), b(j3) - b(j1)));
        v = xadd(v, xscale(omega_block(c, j1), b(j2) - b(j3)));
        emit(v, sys.gens);
      }
  return sys;
}

EquationSystem build_system(const CaseSpec& c) { return c.ksum_zero ? build_system_zero(c) : build_system_nonzero(c); }

std::optional<std::size_t> target_count(int n, int t, bool ksum_zero, SinfMode sinf) {
  if (ksum_zero || sinf != SinfMode::empty) return std::nullopt;
  if (n == 3 && t == 2) return 18;
  if (n == 3 && t == 3) return 6;
  if (n == 4 && t == 2) return 134;
  if (n == 4 && t == 3) return 48;
  if (n == 4 && t == 4) return 24;
  return std::nullopt;
}

std::vector<Regime> regimes(int n) {
  std::vector<Regime> r;
  for (int t = 2; t <= n; ++t) r.push_back({t, false, SinfMode::empty});
  for (int t = 2; t <= n - 1; ++t) r.push_back({t, false, SinfMode::nonempty});
  for (int t = 3; t <= n; ++t) r.push_back({t, true, SinfMode::empty});
  return r;
}

std::vector<CountRow> case_count_report(int n, const EnumConfig& cfg) {
  if (n < 3 || n > 5) throw std::invalid_argument("case_count_report: n must be 3, 4 or 5");
  std::vector<CountRow> rows;
  for (const auto& r : regimes(n)) {
    auto cases = enum_cases(n, r.t, r.ksum_zero, r.sinf, cfg);
    rows.push_back({r.t, r.ksum_zero, r.sinf, cases.size(), target_count(n, r.t, r.ksum_zero, r.sinf)});
  }
  return rows;
}

}  // namespace ratcomp
