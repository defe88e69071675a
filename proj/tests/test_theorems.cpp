#include "doctest.h"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ranktwo/fixtures.hpp"
#include "ranktwo/tables.hpp"
#include "ranktwo/theorems.hpp"

using namespace ranktwo;

namespace {

bool has_clause(const ForcedTwist* t, ClauseId id) {
  if (!t) return false;
  return std::find(t->clauses.begin(), t->clauses.end(), id) !=
         t->clauses.end();
}

bool has_conditional(const NonVanishingReport& rep, ClauseId id) {
  for (const auto& c : rep.conditional)
    if (c.id == id) return true;
  return false;
}

const VanishingConstraint& constraint(const NonVanishingReport& rep,
                                      ClauseId id) {
  for (const auto& v : rep.vanishing_constraints)
    if (v.id == id) return v;
  throw std::logic_error("constraint not present");
}

}  // namespace

TEST_CASE("every built-in dataset reproduces its expected reach") {
  for (const Fixture& f : builtin_fixtures()) {
    if (!f.expected_forced_max) continue;
    CAPTURE(f.name);
    NonVanishingReport rep = forced_nonvanishing(f.profile);
    CHECK(rep.max_forced() == *f.expected_forced_max);
    CHECK(rep.forced_lo == Int(-1));
  }
}

TEST_CASE("stable profile with integral zeta: full clause trace") {
  BundleProfile p = make_profile(ChernClasses(-1, Int(2)), Int(1), Int(2));
  NonVanishingReport rep = forced_nonvanishing(p);

  REQUIRE(rep.forced.size() == 3);
  CHECK(rep.forced_lo == Int(-1));
  CHECK(rep.forced_hi == Int(1));
  CHECK(rep.is_forced(Int(0)));
  CHECK_FALSE(rep.is_forced(Int(2)));
  CHECK(rep.find(Int(5)) == nullptr);

  CHECK(has_clause(rep.find(Int(-1)), ClauseId::T31_i));
  CHECK(has_clause(rep.find(Int(-1)), ClauseId::T31_ii));
  CHECK(has_clause(rep.find(Int(0)), ClauseId::T31_i));
  CHECK(has_clause(rep.find(Int(0)), ClauseId::T31_ii));
  CHECK(has_clause(rep.find(Int(1)), ClauseId::T31_iii));
  CHECK_FALSE(has_clause(rep.find(Int(1)), ClauseId::T31_i));

  const VanishingConstraint& v = constraint(rep, ClauseId::T31_v);
  CHECK_FALSE(v.satisfiable);  // alpha = 1 < bar_alpha = 2
  CHECK(v.bar_alpha_value == Int(2));
  CHECK(v.window_lo == Int(-1));
  CHECK(v.window_hi == Int(0));
  CHECK(v.conclusion == Int(0));

  const VanishingConstraint& vi = constraint(rep, ClauseId::T31_vi);
  CHECK(vi.satisfiable);
  CHECK(vi.window_lo == Int(1));
  CHECK_FALSE(vi.window_hi.has_value());
  CHECK(vi.conclusion == Int(2));

  REQUIRE(rep.comparison.has_value());
  CHECK(rep.comparison->gamma_bound == Int(0));
  CHECK(rep.comparison->our_bound == Int(1));
  CHECK(rep.comparison->verdict == Verdict::Better);
}

TEST_CASE("stable profile with irrational zeta tags the last twist twice") {
  BundleProfile p = make_profile(ChernClasses(0, Int(4)), Int(2), Int(2));
  NonVanishingReport rep = forced_nonvanishing(p);

  REQUIRE(rep.forced.size() == 3);
  CHECK(rep.forced_hi == Int(1));
  CHECK(has_clause(rep.find(Int(1)), ClauseId::T31_i));
  CHECK(has_clause(rep.find(Int(1)), ClauseId::T31_ii));
  CHECK_FALSE(has_clause(rep.find(Int(1)), ClauseId::T31_iii));

  CHECK_FALSE(constraint(rep, ClauseId::T31_v).satisfiable);
  CHECK(constraint(rep, ClauseId::T31_vi).conclusion == Int(2));
}

TEST_CASE("integral zeta with alpha at the ceiling suppresses the extra twist") {
  // zeta = 1 exactly; alpha = bar_alpha = 2 keeps n = 1 out of the forced
  // set and is the one shape where vanishing on [-1, alpha-1] is possible.
  BundleProfile p = make_profile(ChernClasses(-1, Int(2)), Int(2));
  NonVanishingReport rep = forced_nonvanishing(p);

  CHECK(rep.forced_hi == Int(0));
  CHECK_FALSE(rep.is_forced(Int(1)));

  const VanishingConstraint& v = constraint(rep, ClauseId::T31_v);
  CHECK(v.satisfiable);
  CHECK(v.conclusion == Int(1));
  CHECK_FALSE(rep.comparison.has_value());  // no gamma supplied
}

TEST_CASE("strictly semistable profiles walk the tau window") {
  NonVanishingReport rep =
      forced_nonvanishing(make_profile(ChernClasses(0, Int(3)), Int(0), Int(3)));
  CHECK(rep.forced_lo == Int(-1));
  CHECK(rep.forced_hi == Int(2));
  CHECK(has_clause(rep.find(Int(-1)), ClauseId::T37_i));
  CHECK(has_clause(rep.find(Int(0)), ClauseId::T37_i));
  CHECK(has_clause(rep.find(Int(0)), ClauseId::T37_ii));
  CHECK(has_clause(rep.find(Int(2)), ClauseId::T37_ii));
  CHECK_FALSE(has_clause(rep.find(Int(2)), ClauseId::T37_i));

  // c1 = -1 starts the tau window at 1 and includes the boundary
  NonVanishingReport rep2 =
      forced_nonvanishing(make_profile(ChernClasses(-1, Int(2)), Int(0)));
  CHECK(rep2.forced_hi == Int(2));
  CHECK(has_clause(rep2.find(Int(1)), ClauseId::T37_i));
  CHECK(has_clause(rep2.find(Int(1)), ClauseId::T37_ii));
  CHECK(has_clause(rep2.find(Int(2)), ClauseId::T37_ii));
}

TEST_CASE("negative alpha profiles combine the three eta windows") {
  NonVanishingReport rep = forced_nonvanishing(
      make_profile(ChernClasses(0, Int(9)), Int(-3), Int(9)));
  CHECK(rep.forced_lo == Int(-1));
  CHECK(rep.forced_hi == Int(12));

  CHECK(has_clause(rep.find(Int(-1)), ClauseId::T37_i));
  CHECK(has_clause(rep.find(Int(-1)), ClauseId::T37_iii));
  CHECK(has_clause(rep.find(Int(3)), ClauseId::T37_i));
  CHECK(has_clause(rep.find(Int(3)), ClauseId::T37_iii));
  CHECK(has_clause(rep.find(Int(3)), ClauseId::T37_iv));
  CHECK(has_clause(rep.find(Int(8)), ClauseId::T37_iii));
  CHECK_FALSE(has_clause(rep.find(Int(9)), ClauseId::T37_iii));
  CHECK(has_clause(rep.find(Int(12)), ClauseId::T37_iv));
  CHECK_FALSE(has_clause(rep.find(Int(4)), ClauseId::T37_i));

  REQUIRE(rep.comparison.has_value());
  CHECK(rep.comparison->gamma_bound == Int(7));
  CHECK(rep.comparison->verdict == Verdict::Better);
}

TEST_CASE("an integral eta boundary is included and noted") {
  // delta = 4 + 0 = 4 gives eta(delta) = sqrt(25) - 2 = 3 exactly
  NonVanishingReport rep =
      forced_nonvanishing(make_profile(ChernClasses(0, Int(0)), Int(-2)));
  CHECK(has_clause(rep.find(Int(3)), ClauseId::T37_iii));
  REQUIRE_FALSE(rep.notes.empty());
  bool noted = false;
  for (const auto& n : rep.notes)
    if (n.find("integer") != std::string::npos) noted = true;
  CHECK(noted);
  CHECK(rep.forced_hi == Int(5));
}

TEST_CASE("split and inapplicable profiles are refused") {
  CHECK_THROWS_AS(
      forced_nonvanishing(make_profile(ChernClasses(0, Int(-1)), Int(1))),
      std::domain_error);
  CHECK_THROWS_AS(
      forced_nonvanishing(make_profile(ChernClasses(0, Int(0)), Int(0))),
      std::domain_error);
  CHECK_THROWS_AS(
      forced_nonvanishing(make_profile(ChernClasses(-1, Int(0)), Int(1))),
      std::domain_error);
  // stable side needs positive c2
  CHECK_THROWS_AS(
      forced_nonvanishing(make_profile(ChernClasses(0, Int(-5)), Int(1))),
      std::domain_error);
  CHECK_THROWS_AS(forced_nonvanishing(make_profile(ChernClasses(0, Int(0)))),
                  std::domain_error);
}

TEST_CASE("unknown alpha reports the alpha-dependent clauses as conditional") {
  // zeta(0, 5) = (sqrt(64) - 4)/2 = 2, an integer
  NonVanishingReport rep =
      forced_nonvanishing(make_profile(ChernClasses(0, Int(5))));
  CHECK(rep.forced_lo == Int(-1));
  CHECK(rep.forced_hi == Int(1));
  CHECK(has_conditional(rep, ClauseId::T31_iii));
  CHECK(has_conditional(rep, ClauseId::T31_iv));
  CHECK(has_conditional(rep, ClauseId::T31_v));
  CHECK(has_conditional(rep, ClauseId::T31_vi));
  CHECK(has_conditional(rep, ClauseId::T37_i));
  CHECK(has_conditional(rep, ClauseId::T37_ii));
  CHECK(has_conditional(rep, ClauseId::T37_iii));
  CHECK(has_conditional(rep, ClauseId::T37_iv));
  REQUIRE_FALSE(rep.notes.empty());
  CHECK(rep.notes[0].find("alpha unknown") != std::string::npos);
  CHECK(rep.vanishing_constraints.empty());

  // with zeta irrational the bar_alpha - 1 twist is already forced, so the
  // integral-zeta clause is not even conditional
  NonVanishingReport rep2 =
      forced_nonvanishing(make_profile(ChernClasses(0, Int(4))));
  CHECK(rep2.forced_hi == Int(1));
  CHECK_FALSE(has_conditional(rep2, ClauseId::T31_iii));
  CHECK(has_conditional(rep2, ClauseId::T31_iv));
}

TEST_CASE("gamma verdicts cover all three relations") {
  NonVanishingReport rep = forced_nonvanishing(
      make_profile(ChernClasses(-1, Int(2)), Int(1)));
  CHECK(rep.forced_hi == Int(1));
  CHECK(gamma_bound_comparison(rep, Int(2)).verdict == Verdict::Better);
  CHECK(gamma_bound_comparison(rep, Int(3)).verdict == Verdict::Equal);
  CHECK(gamma_bound_comparison(rep, Int(10)).verdict == Verdict::Worse);
  CHECK(gamma_bound_comparison(rep, Int(10)).gamma_bound == Int(8));
  CHECK(std::string(verdict_name(Verdict::Better)) == "better");
  CHECK(std::string(verdict_name(Verdict::Equal)) == "equal");
  CHECK(std::string(verdict_name(Verdict::Worse)) == "worse");
}

TEST_CASE("split decision paths") {
  using Kind = SplitVerdict::Kind;
  auto st = StabilityClass::Stable;
  auto ns = StabilityClass::NonStable;
  auto un = StabilityClass::Unknown;

  SUBCASE("c1 = 0 hinges on h1(E(-1)) alone") {
    SplitVerdict s =
        split_decision(0, Int(4), un, Int(0), std::nullopt, std::nullopt);
    CHECK(s.kind == Kind::Split);
    CHECK(s.criteria == std::vector<ClauseId>{ClauseId::P315_a});
    CHECK_FALSE(s.exception_applied);

    CHECK(split_decision(0, Int(4), un, Int(3), std::nullopt, std::nullopt)
              .kind == Kind::NonSplit);
    CHECK(split_decision(0, Int(4), un, std::nullopt, Int(0), Int(0)).kind ==
          Kind::Undetermined);
  }

  SUBCASE("c1 = -1 splits from any decisive vanishing") {
    CHECK(split_decision(-1, Int(4), st, Int(0), std::nullopt, std::nullopt)
              .kind == Kind::Split);
    SplitVerdict s =
        split_decision(-1, Int(4), st, Int(2), Int(0), std::nullopt);
    CHECK(s.kind == Kind::Split);
    CHECK(s.criteria == std::vector<ClauseId>{ClauseId::P315_b});
  }

  SUBCASE("the h1(E(1)) criterion carries an exception") {
    SplitVerdict e = split_decision(-1, Int(2), st, Int(1), Int(1), Int(0));
    CHECK(e.kind == Kind::Undetermined);
    CHECK(e.exception_applied);
    CHECK(e.criteria == std::vector<ClauseId>{ClauseId::P315_c});

    // unknown c2 or unknown stability keep the exception open
    CHECK(split_decision(-1, std::nullopt, un, Int(1), Int(1), Int(0))
              .exception_applied);
    // a non-stable bundle, or c2 != 2, closes it
    CHECK(split_decision(-1, Int(2), ns, Int(1), Int(1), Int(0)).kind ==
          Kind::Split);
    CHECK(split_decision(-1, Int(4), st, Int(1), Int(1), Int(0)).kind ==
          Kind::Split);
  }

  SUBCASE("c1 = -1 non-split needs both low twists recorded and nonzero") {
    CHECK(split_decision(-1, Int(4), st, Int(1), Int(2), std::nullopt).kind ==
          Kind::NonSplit);
    CHECK(split_decision(-1, Int(4), st, Int(1), std::nullopt, std::nullopt)
              .kind == Kind::Undetermined);
    CHECK(split_decision(-1, Int(4), st, std::nullopt, Int(2), Int(3)).kind ==
          Kind::Undetermined);
  }

  SUBCASE("bad input is rejected") {
    CHECK_THROWS_AS(
        split_decision(2, Int(4), st, Int(0), std::nullopt, std::nullopt),
        std::domain_error);
    CHECK_THROWS_AS(
        split_decision(0, Int(4), st, Int(-1), std::nullopt, std::nullopt),
        std::domain_error);
  }
}

TEST_CASE("left vanishing propagation") {
  SUBCASE("clean dataset: witness with nothing to its left") {
    const Fixture& f = fixture_by_name("4.2");
    REQUIRE(f.table.has_value());
    LeftVanishingResult r = propagate_left_vanishing(*f.table, Int(1));
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == Int(-2));
    CHECK(r.implied == std::vector<Int>{Int(-2)});
    CHECK(r.violations.empty());
  }

  SUBCASE("synthetic violation to the left of the witness") {
    CohomologyTable t = parse_table(
        "c1=0\nc2=4\n"
        "-2 0 1\n-1 0 0\n0 0 0\n1 0 2\n");
    LeftVanishingResult r = propagate_left_vanishing(t, Int(2));
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == Int(0));
    CHECK(r.implied == std::vector<Int>{Int(-2), Int(-1), Int(0)});
    CHECK(r.violations == std::vector<Int>{Int(-2)});
  }

  SUBCASE("no vanishing below the cutoff: no witness") {
    CohomologyTable t = parse_table(
        "c1=0\nc2=4\n"
        "-2 0 1\n-1 0 2\n0 1 3\n");
    LeftVanishingResult r = propagate_left_vanishing(t, Int(5));
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.implied.empty());
    CHECK(r.violations.empty());
  }
}

TEST_CASE("forced sets are contiguous with tagged, ordered clause lists") {
  std::vector<BundleProfile> profiles;
  for (int c1 : {0, -1})
    for (int c2 = 1; c2 <= 30; ++c2)
      profiles.push_back(make_profile(ChernClasses(c1, Int(c2))));
  for (int c1 : {0, -1})
    for (int a = -4; a <= 0; ++a)
      for (int c2 = 1; c2 <= 20; ++c2) {
        BundleProfile p = make_profile(ChernClasses(c1, Int(c2)), Int(a));
        if (p.delta_value && *p.delta_value == Int(0)) continue;
        profiles.push_back(p);
      }

  for (const BundleProfile& p : profiles) {
    CAPTURE(p.chern.c1);
    NonVanishingReport rep = forced_nonvanishing(p);
    REQUIRE_FALSE(rep.forced.empty());
    CHECK(rep.forced_lo == Int(-1));
    for (std::size_t i = 0; i < rep.forced.size(); ++i) {
      REQUIRE(rep.forced[i].n == rep.forced_lo + Int(static_cast<int>(i)));
      REQUIRE_FALSE(rep.forced[i].clauses.empty());
      for (std::size_t j = 1; j < rep.forced[i].clauses.size(); ++j)
        REQUIRE(rep.forced[i].clauses[j - 1] < rep.forced[i].clauses[j]);
    }
  }
}
