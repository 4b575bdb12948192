// Decomposition cases (partitions plus exponent tuples) and their polynomial systems.
#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratcomp/mpoly.hpp"

namespace ratcomp {

// Element indices are 1-based; l[m-1] is the exponent of alpha_m.
struct CaseSpec {
  int n = 0;
  int t = 0;
  bool ksum_zero = false;
  std::vector<int> s_inf;
  std::vector<std::vector<int>> blocks;
  std::vector<int> l;

  int l_of(int m) const { return l[static_cast<std::size_t>(m - 1)]; }
  int block_sum(std::size_t j) const;
  int inf_sum() const;
  // max over representations: max_j max(block sum, inf sum), or max block sum when the k-sum vanishes
  int deg_h() const;
  // 0-based block index, -1 for S_inf
  int block_of(int m) const;
  int nonzero_exponents() const;
  bool regular() const { return !ksum_zero && s_inf.empty(); }

  std::string id() const;
  static CaseSpec parse_id(std::string_view id);
  // Structural invariants; throws std::invalid_argument.
  void validate() const;

  friend bool operator==(const CaseSpec& a, const CaseSpec& b) {
    return a.n == b.n && a.t == b.t && a.ksum_zero == b.ksum_zero && a.s_inf == b.s_inf && a.blocks == b.blocks &&
           a.l == b.l;
  }
  // Canonical order: (t, s_inf, blocks, l).
  friend bool operator<(const CaseSpec& a, const CaseSpec& b);
};

enum class SinfMode { empty, nonempty, any };
enum class CapMode { n_minus_block, n_minus_one, degree_bound };

std::string to_string(SinfMode m);
std::string to_string(CapMode m);
SinfMode parse_sinf_mode(std::string_view s);

struct EnumConfig {
  bool ordered_blocks = true;
  bool gcd_filter = true;
  CapMode cap = CapMode::n_minus_block;
  int min_deg_h = 1;
  bool degree_bound = true;  // deg h <= (n-1)/max(t-2,1)
  bool feasibility = true;   // leading-degree matching of the representations

  // Reproduces the target n=3 counts and the n=4 counts for t=2 and t=4.
  static EnumConfig calibrated();
  // Every partition (unordered) and every l in {0..n-1}^n; used by the progression sweep.
  static EnumConfig exhaustive();
  std::string str() const;
};

// Degree-feasibility of the representation system (see EnumConfig::feasibility).
bool degree_feasible(const CaseSpec& c);

std::vector<CaseSpec> enum_cases(int n, int t, bool ksum_zero, SinfMode mode,
                                 const EnumConfig& cfg = EnumConfig::calibrated());

struct EquationSystem {
  CaseSpec spec;
  std::vector<MultiPoly> gens;
};

// Univariate in x with multivariate coefficients, lowest degree first.
using XPoly = std::vector<MultiPoly>;

XPoly omega(const CaseSpec& c, const std::vector<int>& members);
XPoly omega_block(const CaseSpec& c, std::size_t j);
XPoly omega_inf(const CaseSpec& c);

EquationSystem build_system_nonzero(const CaseSpec& c);
EquationSystem build_system_zero(const CaseSpec& c);
EquationSystem build_system(const CaseSpec& c);

std::vector<VarId> alpha_vars(int n);
std::vector<VarId> beta_vars(int t);

struct CountRow {
  int t;
  bool ksum_zero;
  SinfMode sinf;
  std::size_t count;
  std::optional<std::size_t> target;
};

std::vector<CountRow> case_count_report(int n, const EnumConfig& cfg = EnumConfig::calibrated());
std::optional<std::size_t> target_count(int n, int t, bool ksum_zero, SinfMode sinf);

// Every (regime, t) block the sweeps and bundles cover for a given n.
struct Regime {
  int t;
  bool ksum_zero;
  SinfMode sinf;
};
std::vector<Regime> regimes(int n);

}  // namespace ratcomp
