// Zeros and poles in arithmetic progression: a_i = a0 + T_i d.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratcomp/casegen.hpp"
#include "ratcomp/family.hpp"

namespace ratcomp {

struct APAssignment {
  std::vector<int> T;  // T[m-1] is the position of a_m

  void validate(int n) const;
  APAssignment reflected() const;  // T_i -> (n-1) - T_i
  std::string str() const;
  static APAssignment parse(std::string_view s);
  // All permutations of {0..n-1}, lexicographic.
  static std::vector<APAssignment> all(int n);

  friend bool operator==(const APAssignment&, const APAssignment&) = default;
};

enum class VerdictKind { Contradiction, TrivialDecomposition, Family };

enum class Reason {
  deg_h_below_2,
  beta_coincide,
  power_inconsistency,
  roots_coincide,
  extra_zeros_poles,
  identity_fails,
  too_few_zeros_poles,
  family,
};

std::string to_string(VerdictKind k);
std::string to_string(Reason r);
VerdictKind parse_verdict_kind(std::string_view s);
Reason parse_reason(std::string_view s);

struct Verdict {
  VerdictKind kind = VerdictKind::Contradiction;
  Reason reason = Reason::roots_coincide;
  std::string detail;
  std::optional<PowerConstraint> power;  // combined d-power constraint, when one was derived
  std::optional<int> witness_count;      // distinct zeros/poles of the explicit g(h) (extra-zeros stage)
  std::optional<std::string> witness_field;
  std::optional<SolutionFamily> family;
};

// alpha_i -> a0 + T_i d in every generator.
std::vector<MultiPoly> substitute_ap(const std::vector<MultiPoly>& gens, const APAssignment& T);

struct DConstraints {
  std::vector<PowerConstraint> constraints;
  bool beta_shortcut = false;  // a block pair with all-zero exponents forces b_i = b_j
  std::string shortcut_detail;
};

DConstraints derive_d_constraints(const CaseSpec& c, const APAssignment& T);

struct CombinedPower {
  bool consistent = true;
  bool forces_zero = false;  // d^N = 0 with N > 0
  int N = 0;                 // 0: unconstrained
  Rational M = 1;
  std::string detail;
};

CombinedPower combine_constraints(const std::vector<PowerConstraint>& cs);

// The EQ1/EQ2 identities evaluated at x = a_m for the roots m of f, after the progression substitution.
std::vector<MultiPoly> substitution_system(const CaseSpec& c, const APAssignment& T);

// beta_i - beta_j as a polynomial in d for each admissible (pair, r, s) choice of the substitution system.
std::vector<MultiPoly> beta_difference_choices(const CaseSpec& c, const APAssignment& T, std::size_t i,
                                               std::size_t j);

Verdict classify_case(const CaseSpec& c, const APAssignment& T);

// Symmetry-reduced label of a surviving family: block pattern along the progression (up to relabelling
// and reversal) plus the d-relation up to d -> -d.
std::string family_class_key(const CaseSpec& c, const APAssignment& T, const std::optional<MultiPoly>& d_relation);

struct ReportEntry {
  CaseSpec spec;
  APAssignment T;
  Verdict verdict;
};

struct FamilyClass {
  std::string key;
  std::size_t members = 0;
  std::size_t representative = 0;  // index into entries
};

struct ClassificationReport {
  int n = 0;
  std::string config;
  std::vector<ReportEntry> entries;

  std::vector<FamilyClass> family_classes() const;
  // (regime label, kind, reason) -> count
  std::map<std::tuple<std::string, std::string, std::string>, std::size_t> summary() const;
  std::string summary_table() const;
};

std::string regime_label(const CaseSpec& c);

// The zero-sum, four-singleton-block case admits g(h) = f with deg h = 1; the sweep files it as
// TrivialDecomposition and the report lists this instance alongside.
struct LinearHNote {
  std::string case_id;
  APAssignment T;
  QRatFun f, g, h;
};
// Composition checked exactly; only defined for n = 4.
std::optional<LinearHNote> linear_h_note(int n);

struct SweepOptions {
  EnumConfig cfg = EnumConfig::exhaustive();
  int workers = 0;  // 0: default OpenMP thread count
};

// The (case, T) grid: every regime, every case, every permutation.
std::vector<std::pair<CaseSpec, APAssignment>> sweep_grid(int n, const EnumConfig& cfg);

// Reference implementation: one thread, grid order.
ClassificationReport classify_all_serial(int n, const SweepOptions& opt = {});
// OpenMP over the grid; results merged in grid order, identical to the serial report.
ClassificationReport classify_all(int n, const SweepOptions& opt = {});

}  // namespace ratcomp
