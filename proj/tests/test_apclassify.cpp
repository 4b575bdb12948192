#include <doctest.h>

#include <random>

#include "ratcomp/apclassify.hpp"
#include "ratcomp/verify.hpp"

using namespace ratcomp;

namespace {
MultiPoly P(const char* s) { return MultiPoly::parse(s); }
Verdict classify(const char* id, const char* T) { return classify_case(CaseSpec::parse_id(id), APAssignment::parse(T)); }
const char* kProp1 = "n4-t2-nz-inf-b1,2|3,4-l1,1,1,1";
}  // namespace

TEST_SUITE("apclassify") {
  TEST_CASE("progression substitution") {
    auto T = APAssignment::parse("0,3,1,2");
    auto out = substitute_ap({P("a1 + a2 - a3 - a4"), P("a2^2 - a2*a3 - a2*a4 + a3*a4 - b1 + b2")}, T);
    CHECK(out[0].is_zero());
    CHECK(out[1] == P("2*d^2 - b1 + b2"));
    auto T2 = APAssignment::parse("0,2,3,1");  // T2 - T4 = 1
    CHECK(substitute_ap({P("(a2 - a4)^2 - b1 + b2")}, T2)[0] == P("d^2 - b1 + b2"));
  }

  TEST_CASE("alpha0 cancels from the (1,1,1,1) system") {
    // Generator by generator only where the linear relation survives; elsewhere it already forces d = 0.
    auto c = CaseSpec::parse_id(kProp1);
    int feasible = 0;
    for (const auto& T : APAssignment::all(4)) {
      auto subs = substitute_ap(build_system(c).gens, T);
      bool linear_vanishes = T.T[0] + T.T[1] == T.T[2] + T.T[3];
      if (linear_vanishes) {
        ++feasible;
        for (const auto& g : subs) CHECK(g.degree(VarId::alpha0()) == 0);
      } else {
        bool kills_d = false;
        for (const auto& g : subs) kills_d = kills_d || (g.variables() == std::set<VarId>{VarId::d()} && g.total_degree() == 1);
        CHECK(kills_d);
      }
    }
    CHECK(feasible == 8);
  }

  TEST_CASE("assignments") {
    CHECK(APAssignment::all(4).size() == 24);
    CHECK(APAssignment::parse("0,3,1,2").reflected() == APAssignment::parse("3,0,2,1"));
    CHECK_THROWS(APAssignment::parse("0,0,1,2").validate(4));
  }

  TEST_CASE("power constraints") {
    auto c2222 = CaseSpec::parse_id("n4-t2-nz-inf-b1,2|3,4-l2,2,2,2");
    for (const auto& T : APAssignment::all(4)) {
      auto comb = combine_constraints(derive_d_constraints(c2222, T).constraints);
      CHECK_FALSE(comb.consistent);
    }
    auto v = classify("n4-t2-nz-inf-b1,2|3,4-l2,2,2,2", "0,3,1,2");
    CHECK(v.reason == Reason::power_inconsistency);
    CHECK(v.detail.find("d^0 = -1") != std::string::npos);

    std::set<std::string> seen;
    auto c1122 = CaseSpec::parse_id("n4-t2-nz-inf-b1,2|3,4-l1,1,2,2");
    for (const auto& T : APAssignment::all(4)) {
      auto comb = combine_constraints(derive_d_constraints(c1122, T).constraints);
      if (comb.consistent && comb.N == 2) seen.insert(comb.M.str());
    }
    CHECK(seen == std::set<std::string>{"-1/2", "1/2"});

    auto c3311 = CaseSpec::parse_id("n4-t2-nz-inf-b1,2|3,4-l3,3,1,1");
    auto comb = combine_constraints(derive_d_constraints(c3311, APAssignment::parse("0,3,2,1")).constraints);
    CHECK(comb.consistent);
    CHECK(comb.N == 4);
    CHECK(comb.M == Rational(1, 4));
    CHECK_FALSE(combine_constraints({{2, 1, "x"}, {2, 3, "y"}}).consistent);
    CHECK(combine_constraints({{2, 4, "x"}, {1, 2, "y"}}).consistent);
  }

  TEST_CASE("beta difference is the same for every choice") {
    auto choices = beta_difference_choices(CaseSpec::parse_id(kProp1), APAssignment::parse("0,3,1,2"), 0, 1);
    REQUIRE(choices.size() >= 2);
    for (const auto& p : choices) CHECK(p == P("2*d^2"));
  }

  TEST_CASE("verdicts") {
    auto fam = classify(kProp1, "0,3,1,2");
    REQUIRE(fam.kind == VerdictKind::Family);
    REQUIRE(fam.family.has_value());
    CHECK(fam.family->class_key == prop1_family().class_key);

    for (const char* id : {"n4-t2-nz-inf-b1|2,3,4-l1,1,1,1", "n4-t2-nz-inf-b1|2,3,4-l2,1,1,1", "n4-t2-nz-inf-b1|2,3,4-l3,1,1,1"})
      for (const auto& T : APAssignment::all(4)) CHECK(classify_case(CaseSpec::parse_id(id), T).kind == VerdictKind::Contradiction);

    auto extra = classify("n4-t2-nz-inf-b1,2|3,4-l1,1,2,2", "0,3,1,2");
    CHECK(extra.reason == Reason::extra_zeros_poles);
    CHECK(extra.witness_count == 6);

    for (const auto& T : APAssignment::all(4)) {
      auto v = classify_case(CaseSpec::parse_id("n4-t3-z-inf-b1,2|3|4-l1,1,2,2"), T);
      CHECK(v.kind == VerdictKind::Contradiction);
    }
    CHECK(classify("n4-t3-z-inf-b1,2|3|4-l1,1,2,2", "0,1,2,3").reason == Reason::beta_coincide);

    // (II) t=3, singleton blocks: the surviving exponent tuples all give deg h = 1.
    for (const auto& c : enum_cases(4, 3, false, SinfMode::nonempty))
      for (const auto& T : APAssignment::all(4)) {
        auto v = classify_case(c, T);
        CHECK(v.kind != VerdictKind::Family);
      }
  }

  TEST_CASE("the zero-sum four-block instance is filed as trivial") {
    auto note = linear_h_note(4);
    REQUIRE(note.has_value());
    CHECK(note->h.degree() == 1);
    CHECK(equal(compose(note->g, note->h), note->f));
    CHECK(classify_case(CaseSpec::parse_id(note->case_id), note->T).kind == VerdictKind::TrivialDecomposition);
    CHECK_FALSE(linear_h_note(3).has_value());
  }

  TEST_CASE("reflection keeps the verdict kind") {
    auto grid = sweep_grid(4, EnumConfig::calibrated());
    std::mt19937_64 rng(606);
    for (int i = 0; i < 300; ++i) {
      const auto& [c, T] = grid[rng() % grid.size()];
      CHECK(classify_case(c, T).kind == classify_case(c, T.reflected()).kind);
    }
  }

  TEST_CASE("parallel sweep matches the serial reference") {
    SweepOptions opt;
    opt.workers = 3;
    auto par = classify_all(3, opt);
    auto ser = classify_all_serial(3, opt);
    REQUIRE(par.entries.size() == ser.entries.size());
    for (std::size_t i = 0; i < par.entries.size(); ++i) {
      CHECK(par.entries[i].spec == ser.entries[i].spec);
      CHECK(par.entries[i].T == ser.entries[i].T);
      CHECK(par.entries[i].verdict.reason == ser.entries[i].verdict.reason);
      CHECK(par.entries[i].verdict.detail == ser.entries[i].verdict.detail);
    }
    CHECK(par.summary_table() == ser.summary_table());
  }

  TEST_CASE("families re-verify and the oracle rediscovers them") {
    std::mt19937_64 rng(707);
    auto fam = prop1_family();
    for (int i = 0; i < 3; ++i) {
      auto w = verify_family(fam, random_params(fam, rng), random_k(fam.spec, rng));
      CHECK(count_zeros_poles(w.f()) == 4);
    }
    // a0 = 0, d = 1, b1 = 0, k = (1, 1)
    FactoredForm<Rational> f{{Rational(0), 1}, {Rational(1), 1}, {Rational(2), 1}, {Rational(3), 1}};
    CHECK_FALSE(brute_force_decompose(f, 2).empty());
  }
}
