#include <doctest.h>

#include "ratcomp/casegen.hpp"

using namespace ratcomp;

TEST_SUITE("casegen") {
  TEST_CASE("calibrated counts") {
    CHECK(enum_cases(3, 2, false, SinfMode::empty).size() == 18);
    CHECK(enum_cases(3, 3, false, SinfMode::empty).size() == 6);
    CHECK(enum_cases(4, 2, false, SinfMode::empty).size() == 134);
    CHECK(enum_cases(4, 4, false, SinfMode::empty).size() == 24);
  }

  TEST_CASE("ids round trip and cases validate") {
    for (int n : {3, 4})
      for (const auto& r : regimes(n))
        for (auto cfg : {EnumConfig::calibrated(), EnumConfig::exhaustive()})
          for (const auto& c : enum_cases(n, r.t, r.ksum_zero, r.sinf, cfg)) {
            CHECK(CaseSpec::parse_id(c.id()) == c);
            CHECK_NOTHROW(c.validate());
            CHECK(c.t == static_cast<int>(c.blocks.size()));
          }
  }

  TEST_CASE("enumeration is sorted and duplicate free") {
    auto cs = enum_cases(4, 3, false, SinfMode::any, EnumConfig::exhaustive());
    for (std::size_t i = 1; i < cs.size(); ++i) CHECK(cs[i - 1] < cs[i]);
  }

  TEST_CASE("bad input") {
    CHECK_THROWS_AS(CaseSpec::parse_id("n4-t2-b1,2|3,4-l1,1,1,1"), ParseError);
    CHECK_THROWS(enum_cases(2, 2, false, SinfMode::empty));
    CHECK_THROWS(enum_cases(4, 2, true, SinfMode::empty));
    CaseSpec c = CaseSpec::parse_id("n4-t2-nz-inf-b1,2|3,4-l1,1,1,1");
    c.blocks[1] = {3};
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  }

  TEST_CASE("systems of a small case") {
    auto s = build_system(CaseSpec::parse_id("n4-t2-nz-inf-b1,2|3,4-l1,1,1,1"));
    CHECK_FALSE(s.gens.empty());
    // the progression family is a solution: a = 0,3,1,2 with b2 = b1 - 2
    std::map<VarId, Rational> pt{{VarId::alpha(1), 0}, {VarId::alpha(2), 3}, {VarId::alpha(3), 1},
                                 {VarId::alpha(4), 2}, {VarId::beta(1), 5}, {VarId::beta(2), 3}};
    for (const auto& g : s.gens) CHECK(g.evaluate(pt).is_zero());
  }
}
