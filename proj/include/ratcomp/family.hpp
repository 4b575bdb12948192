// Solution families, verified decomposition witnesses and the converse construction f = g(h).
#pragma once

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratcomp/casegen.hpp"
#include "ratcomp/poly.hpp"

namespace ratcomp {

// Composition mismatch: the family or witness is wrong.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameters outside the admissible set (d = 0, violated d-constraint, k-sum, coinciding roots).
struct ConstraintError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// d^N = M
struct PowerConstraint {
  int N = 0;
  Rational M;
  std::string origin;  // which substitution produced it

  bool contradiction() const { return N == 0 && !M.is_one(); }
  std::string str() const { return "d^" + std::to_string(N) + " = " + M.str(); }
  friend bool operator==(const PowerConstraint& a, const PowerConstraint& b) { return a.N == b.N && a.M == b.M; }
};

class DecompositionWitness {
 public:
  // The only way to obtain a witness: throws VerificationError unless g(h) == f and deg g, deg h >= 2.
  static DecompositionWitness make(KRatFun f, KRatFun g, KRatFun h, std::string provenance);

  const KRatFun& f() const { return f_; }
  const KRatFun& g() const { return g_; }
  const KRatFun& h() const { return h_; }
  const std::string& provenance() const { return prov_; }
  // Radicand of the coefficient field, empty for Q.
  std::optional<Rational> field() const;
  std::string field_name() const;

 private:
  DecompositionWitness(KRatFun f, KRatFun g, KRatFun h, std::string p)
      : f_(std::move(f)), g_(std::move(g)), h_(std::move(h)), prov_(std::move(p)) {}

  KRatFun f_, g_, h_;
  std::string prov_;
};

struct SolutionFamily {
  CaseSpec spec;
  std::optional<std::vector<int>> T;         // progression positions, when the family comes from the sweep
  std::vector<VarId> parameters;             // free symbols besides the k_j
  std::map<VarId, MultiPoly> alpha_forms;    // every a_m
  std::map<VarId, MultiPoly> beta_forms;     // every b_j; z stands for 1/d
  std::vector<PowerConstraint> d_constraints;
  std::optional<MultiPoly> d_relation;       // univariate in d, must vanish
  std::string class_key;

  // "a1^(l*k1)" style description of f's exponents.
  std::string exponent_pattern() const;
};

// Builds f, g, h at the given parameter values and block exponents k (one per block).
DecompositionWitness verify_family(const SolutionFamily& fam, const std::map<VarId, QuadExt>& params,
                                   const std::vector<long>& k, const std::string& provenance = "");

// Block exponents allowed for a case: nonzero, with the required k-sum.
bool admissible_k(const CaseSpec& c, const std::vector<long>& k);

// Families written down from the closed forms.
SolutionFamily prop1_family();    // (x-a0)^k1 (x-a0-d)^k2 (x-a0-2d)^k2 (x-a0-3d)^k1
SolutionFamily thm2c_family();    // (x-(a1+a2)/2)^(2k) (x-a1)^k' (x-a2)^k'
SolutionFamily case2121_family(); // the solved (2,1,2,1) system

// Small random rational in [-10,10] with denominator <= 10.
Rational random_small_rational(std::mt19937_64& rng, bool nonzero = false);

// Parameter values satisfying the family's constraints (roots of d-relations in Q or Q(sqrt m)),
// with free betas and a0 drawn at random; retries until roots are distinct.
std::map<VarId, QuadExt> random_params(const SolutionFamily& fam, std::mt19937_64& rng);

// Block exponents from {-3..3} \ {0} with the case's k-sum condition.
std::vector<long> random_k(const CaseSpec& c, std::mt19937_64& rng);

// Roots of p lying in Q or in one quadratic extension; empty if none are found that way.
std::vector<QuadExt> small_field_roots(const QPoly& p);

}  // namespace ratcomp
