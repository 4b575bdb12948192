// Buchberger Groebner bases, normal forms, elimination, saturation and linear solving over Q.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratcomp/mpoly.hpp"

namespace ratcomp {

enum class OrderKind { lex, grevlex, block_elim };

// Variables listed in `precedence` come first (most significant first); the rest follow the
// default ranking w > z > b1 > b2 > ... > d > a1 > a2 > ... > a0.
struct MonomialOrder {
  OrderKind kind = OrderKind::lex;
  std::vector<VarId> precedence;
  std::vector<VarId> block;         // block_elim: these variables are eliminated first
  OrderKind inner = OrderKind::lex;  // order used inside each block

  static MonomialOrder lex(std::vector<VarId> prec = {});
  static MonomialOrder grevlex(std::vector<VarId> prec = {});
  static MonomialOrder block_elim(std::vector<VarId> block, std::vector<VarId> prec = {},
                                  OrderKind inner = OrderKind::lex);

  // Ring variables in significance order for the given variable set.
  std::vector<VarId> arrange(const std::set<VarId>& vars) const;
  // a > b. Slow path; the engine uses packed exponents.
  bool greater(const Monomial& a, const Monomial& b) const;
  std::string str() const;
};

Monomial leading_monomial(const MultiPoly& p, const MonomialOrder& ord);
Rational leading_coefficient(const MultiPoly& p, const MonomialOrder& ord);
MultiPoly spoly(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& ord);

struct Reduction {
  MultiPoly remainder;
  std::vector<MultiPoly> quotients;  // p = sum quotients[i]*basis[i] + remainder
};

Reduction reduce_with_quotients(const MultiPoly& p, const std::vector<MultiPoly>& basis, const MonomialOrder& ord);
MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& basis, const MonomialOrder& ord);

// Reduced Groebner basis, monic, sorted by leading monomial (largest first). The unit ideal gives [1].
std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& ord);

bool is_unit_ideal(const std::vector<MultiPoly>& gb);
bool in_ideal(const MultiPoly& p, const std::vector<MultiPoly>& gb, const MonomialOrder& ord);
// Mutual reduction to zero of each generating set modulo the other's basis.
bool same_ideal(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b, const MonomialOrder& ord);

// I : f^inf via an auxiliary variable w with w*f - 1; the result is a reduced basis in `ord`.
std::vector<MultiPoly> saturate(const std::vector<MultiPoly>& gens, const MultiPoly& f, const MonomialOrder& ord);
std::vector<MultiPoly> saturate_all(std::vector<MultiPoly> gens, const std::vector<MultiPoly>& fs,
                                    const MonomialOrder& ord);

struct EliminateOptions {
  std::vector<MultiPoly> saturate_by;  // remove the components where any of these vanish
  std::vector<VarId> precedence;       // order among the kept variables
  OrderKind inner = OrderKind::lex;
};

// Members of the block-elimination basis free of `drop`.
std::vector<MultiPoly> eliminate(const std::vector<MultiPoly>& gens, const std::vector<VarId>& drop,
                                 const EliminateOptions& opt = {});

// Pairwise differences of the given variables, for distinctness saturation.
std::vector<MultiPoly> pairwise_differences(const std::vector<VarId>& vars);

struct LinearSolution {
  bool consistent = true;
  std::map<VarId, MultiPoly> solved;   // pivot unknown -> affine form
  std::vector<VarId> free_unknowns;
  std::vector<MultiPoly> relations;    // unknown-free consequences (non-constant)
};

// Row reduction in the unknowns; coefficients of unknowns must be rational constants.
LinearSolution linear_solve(const std::vector<MultiPoly>& gens, const std::vector<VarId>& unknowns);

// Exhaustive Buchberger criterion: every S-polynomial of basis pairs reduces to zero.
bool satisfies_buchberger_criterion(const std::vector<MultiPoly>& gb, const MonomialOrder& ord);

}  // namespace ratcomp
