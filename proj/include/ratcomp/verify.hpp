// Worked examples and the zeros/poles decomposition oracle.
#pragma once

#include <string>
#include <vector>

#include "ratcomp/family.hpp"

namespace ratcomp {

struct DemoCheck {
  std::string label;
  bool ok = false;
  std::string detail;
};

struct DemoResult {
  std::string name;
  std::vector<DecompositionWitness> witnesses;
  std::vector<DemoCheck> checks;

  bool ok() const;
  std::string str() const;
};

std::vector<std::string> demo_names();
// Throws std::invalid_argument for an unknown name.
DemoResult run_demo(const std::string& name);

// Every decomposition f = g(h) in the zeros/poles framework with 2 <= deg h <= max_deg_h and g not a
// power of a Moebius map, sorted by (deg h, case id). Requires at most 6 zeros and poles.
std::vector<DecompositionWitness> brute_force_decompose(const FactoredForm<QuadExt>& f, int max_deg_h);
std::vector<DecompositionWitness> brute_force_decompose(const FactoredForm<Rational>& f, int max_deg_h);

// Three-root instances (a), (b), (c).
FactoredForm<Rational> thm2a_instance(const Rational& a1, long k1, long k2);
FactoredForm<Rational> thm2b_instance(const Rational& a1, const Rational& a2, long k1, long k2);
FactoredForm<Rational> thm2c_instance(const Rational& a1, const Rational& a2, long k1, long k2);

}  // namespace ratcomp
