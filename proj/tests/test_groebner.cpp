#include <doctest.h>

#include "gen.hpp"
#include "ratcomp/casegen.hpp"
#include "ratcomp/groebner.hpp"

using namespace ratcomp;

namespace {
MultiPoly P(const char* s) { return MultiPoly::parse(s); }

MultiPoly random_mpoly(gen::Gen& g, const std::vector<VarId>& vars, int terms, int maxexp) {
  MultiPoly p;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (const auto& v : vars) {
      auto e = static_cast<unsigned>(g.integer(0, maxexp));
      if (e) m = m * Monomial(v, e);
    }
    p.add_term(m, g.rational(5, 3));
  }
  return p;
}
}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("parse and print") {
    CHECK(P("a1*b2 - 3/2*d^2 + z") == P("z + a1*b2 - 3/2*d^2"));
    CHECK(P(P("(a1 - a2)^3").str().c_str()) == P("(a1 - a2)^3"));
    CHECK(P("a1 + a2").substitute({{VarId::alpha(2), P("-a1")}}).is_zero());
    CHECK_THROWS(P("a1 +* 2"));
  }

  TEST_CASE("small bases") {
    auto lex = MonomialOrder::lex();
    auto gb = buchberger({P("a1^2 - a2"), P("a1*a2 - 1")}, lex);
    CHECK(in_ideal(P("a2^3 - 1"), gb, lex));
    CHECK(satisfies_buchberger_criterion(gb, lex));
    CHECK(is_unit_ideal(buchberger({P("a1 - 1"), P("a1 - 2")}, lex)));
    CHECK(buchberger({P("2*a1 - 4")}, lex) == std::vector<MultiPoly>{P("a1 - 2")});
  }

  TEST_CASE("saturation removes a component") {
    auto ord = MonomialOrder::grevlex();
    // a1*(a1 - a2) = 0 minus the component a1 = 0
    auto s = saturate({P("a1^2 - a1*a2")}, P("a1"), ord);
    CHECK(same_ideal(s, {P("a1 - a2")}, ord));
  }

  TEST_CASE("linear solve") {
    auto sol = linear_solve({P("b1 - b2 - 2*d^2"), P("b2 + a1 - a2")}, {VarId::beta(1), VarId::beta(2)});
    REQUIRE(sol.consistent);
    CHECK(sol.solved.at(VarId::beta(1)) == P("a2 - a1 + 2*d^2"));
    auto bad = linear_solve({P("b1 - 1"), P("b1 - 2")}, {VarId::beta(1)});
    CHECK_FALSE(bad.consistent);
    auto rel = linear_solve({P("b1 - a1"), P("b1 - a2")}, {VarId::beta(1)});
    REQUIRE(rel.relations.size() == 1);
    CHECK(same_ideal(rel.relations, {P("a1 - a2")}, MonomialOrder::lex()));
  }

  TEST_CASE("reduction properties on random ideals") {
    gen::Gen g(505);
    std::vector<VarId> vars{VarId::alpha(1), VarId::alpha(2), VarId::beta(1)};
    for (auto ord : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block_elim({VarId::beta(1)})}) {
      for (int trial = 0; trial < 15; ++trial) {
        std::vector<MultiPoly> gens{random_mpoly(g, vars, 3, 2), random_mpoly(g, vars, 3, 2)};
        auto gb = buchberger(gens, ord);
        CHECK(satisfies_buchberger_criterion(gb, ord));
        for (const auto& f : gens) CHECK(reduce(f, gb, ord).is_zero());
        for (int s = 0; s < 5; ++s) {
          auto p = random_mpoly(g, vars, 4, 3);
          auto r = reduce_with_quotients(p, gb, ord);
          CHECK(reduce(r.remainder, gb, ord) == r.remainder);
          MultiPoly back = r.remainder;
          for (std::size_t i = 0; i < gb.size(); ++i) back += r.quotients[i] * gb[i];
          CHECK(back == p);
        }
      }
    }
  }

  TEST_CASE("solved n=4 systems") {
    auto elim = [](const char* id) {
      CaseSpec c = CaseSpec::parse_id(id);
      EliminateOptions opt;
      opt.saturate_by = pairwise_differences(alpha_vars(c.n));
      auto bd = pairwise_differences(beta_vars(c.t));
      opt.saturate_by.insert(opt.saturate_by.end(), bd.begin(), bd.end());
      return eliminate(build_system(c).gens, beta_vars(c.t), opt);
    };
    auto ord = MonomialOrder::grevlex();
    CHECK(same_ideal(elim("n4-t2-nz-inf-b1,2|3,4-l1,1,1,1"), {P("a1 + a2 - a3 - a4")}, ord));
    CHECK(same_ideal(elim("n4-t2-nz-inf-b1,2|3,4-l2,1,2,1"), {P("3*a3 - a1 - 2*a2"), P("3*a4 - 4*a1 + a2")}, ord));
    CHECK(same_ideal(elim("n4-t2-nz-inf-b1,2,3|4-l1,1,1,3"),
                     {P("a1 + a2 + a3 - 3*a4"), P("a2^2 + a2*a3 - 3*a2*a4 + a3^2 - 3*a3*a4 + 3*a4^2")}, ord));
  }
}
