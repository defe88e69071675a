#include "doctest.h"

#include <fstream>
#include <stdexcept>
#include <string>

#include "ranktwo/fixtures.hpp"
#include "ranktwo/tables.hpp"
#include "ranktwo/theorems.hpp"

using namespace ranktwo;

namespace {

const char* kSampleText =
    "# worked dataset\n"
    "c1=-1\n"
    "c2=2\n"
    "alpha=1\n"
    "gamma=2\n"
    "-2 0 0\n"
    "-1 0 1\n"
    "0 0 2\n"
    "1 1 1\n"
    "2 7 0\n"
    "3 21 0\n";

const CheckResult& check_named(const std::vector<CheckResult>& rs,
                               const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return r;
  throw std::logic_error("check not present: " + name);
}

int parse_fails_at(const std::string& text) {
  try {
    parse_table(text);
  } catch (const TableParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("parsing the worked dataset") {
  CohomologyTable t = parse_table(kSampleText);
  CHECK(t.chern == ChernClasses(-1, Int(2)));
  CHECK(t.alpha == Int(1));
  CHECK(t.gamma == Int(2));
  CHECK_FALSE(t.beta.has_value());
  CHECK(t.n_min == Int(-2));
  CHECK(t.n_max == Int(3));
  REQUIRE(t.rows.size() == 6);
  Int h1s[] = {Int(0), Int(1), Int(2), Int(1), Int(0), Int(0)};
  for (int i = 0; i < 6; ++i) CHECK(t.row(Int(i - 2)).h1 == h1s[i]);
  CHECK(t.row(Int(2)).h0 == Int(7));
  CHECK_FALSE(t.row(Int(2)).h2.has_value());
  CHECK(t.contains(Int(0)));
  CHECK_FALSE(t.contains(Int(4)));
  CHECK_THROWS_AS(t.row(Int(4)), std::out_of_range);
}

TEST_CASE("parse rejects malformed input with the offending line") {
  CHECK(parse_fails_at("c1=0\nc2=4\n0 1 2\n2 3 4\n") == 4);  // gap
  CHECK_THROWS_WITH_AS(parse_table("c1=0\nc2=4\n0 1 2\n2 3 4\n"),
                       "line 4: non-contiguous window", TableParseError);
  CHECK(parse_fails_at("c1=0\nc2=4\n0 1 2\n0 1 2\n") == 4);  // duplicate twist
  CHECK(parse_fails_at("c1=0\nc2=4\n0 1 -1\n") == 3);        // negative count
  CHECK(parse_fails_at("c1=0\nc2=4\n0 one 2\n") == 3);       // malformed int
  CHECK(parse_fails_at("c1=0\nc2=4\n0 1\n") == 3);           // bad arity
  CHECK(parse_fails_at("c1=0\nc2=4\n0 1 2 3\n") == 3);       // bad arity
  CHECK(parse_fails_at("c2=4\n0 1 2\n") > 0);                // missing c1
  CHECK(parse_fails_at("c1=0\n0 1 2\n") > 0);                // missing c2
  CHECK(parse_fails_at("c1=0\nc2=4\n") > 0);                 // no data rows
  CHECK(parse_fails_at("c1=0\nc2=4\nc2=5\n0 1 2\n") == 3);   // duplicate header
  CHECK(parse_fails_at("c1=0\nc2=4\nzeta=1\n0 1 2\n") == 3); // unknown header
  CHECK(parse_fails_at("c1=2\nc2=4\n0 1 2\n") > 0);          // bad c1
  // negative twists are fine, negative counts are not
  CHECK_NOTHROW(parse_table("c1=0\nc2=4\n-5 0 0\n-4 0 1\n"));
}

TEST_CASE("parse enforces the alpha-section invariant") {
  CHECK_THROWS_WITH_AS(parse_table("c1=0\nc2=4\nalpha=1\n0 2 0\n1 4 0\n"),
                       "line 4: h0 > 0 at twist 0 below the declared alpha=1",
                       TableParseError);
  CHECK_THROWS_WITH_AS(parse_table("c1=0\nc2=4\nalpha=1\n0 0 0\n1 0 0\n"),
                       "line 5: h0 = 0 at the declared alpha=1",
                       TableParseError);
  // alpha outside the window constrains only what is visible
  CHECK_NOTHROW(parse_table("c1=0\nc2=4\nalpha=5\n0 0 0\n1 0 0\n"));
}

TEST_CASE("serialization round-trips every built-in table") {
  for (const Fixture& f : builtin_fixtures()) {
    if (!f.table) continue;
    CAPTURE(f.name);
    CohomologyTable again = parse_table(serialize(*f.table));
    CHECK(again == *f.table);
  }
  // h2/h3 survive the trip once both are present
  CohomologyTable filled = fill_by_duality(parse_table(kSampleText)).table;
  CHECK(parse_table(serialize(filled)) == filled);
}

TEST_CASE("shipped table files match the built-in datasets") {
  const char* pairs[][2] = {{"4.2", "/fixtures/ex42.tbl"},
                            {"4.3A", "/fixtures/ex43a.tbl"},
                            {"4.3B", "/fixtures/ex43b.tbl"},
                            {"4.3C", "/fixtures/ex43c.tbl"},
                            {"4.10", "/fixtures/ex410.tbl"}};
  for (const auto& pr : pairs) {
    CAPTURE(pr[0]);
    const Fixture& f = fixture_by_name(pr[0]);
    REQUIRE(f.table.has_value());
    CohomologyTable parsed =
        parse_table_file(std::string(RANKTWO_SOURCE_DIR) + pr[1]);
    CHECK(parsed == *f.table);
  }
  CHECK_THROWS_AS(parse_table_file("/nonexistent/path.tbl"),
                  std::runtime_error);
}

TEST_CASE("duality fill completes the sample dataset") {
  DualityFillResult r = fill_by_duality(parse_table(kSampleText));
  CHECK(r.conflicts.empty());
  // duals of -2 and -1 lie inside the window; 0..3 map outside it
  CHECK(r.skipped == std::vector<Int>{Int(0), Int(1), Int(2), Int(3)});
  CHECK(r.table.row(Int(-1)).h2 == Int(0));
  CHECK(r.table.row(Int(-1)).h3 == Int(0));
  CHECK(r.table.row(Int(-2)).h2 == Int(1));
  CHECK(r.table.row(Int(-2)).h3 == Int(0));
  CHECK_FALSE(r.table.row(Int(0)).h2.has_value());

  // applying the fill twice changes nothing
  DualityFillResult r2 = fill_by_duality(r.table);
  CHECK(r2.table == r.table);
  CHECK(r2.conflicts.empty());
}

TEST_CASE("duality fill reports disagreements without overwriting") {
  CohomologyTable t = parse_table(
      "c1=0\nc2=4\n"
      "-3 0 1 5 0\n"
      "-2 0 4 9 9\n"
      "-1 0 4 1 0\n");
  DualityFillResult r = fill_by_duality(t);
  REQUIRE(r.conflicts.size() == 3);
  CHECK(r.conflicts[0].n == Int(-3));
  CHECK(r.conflicts[0].degree == 2);
  CHECK(r.conflicts[0].recorded == Int(5));
  CHECK(r.conflicts[0].implied == Int(4));
  // -2 is its own dual here and disagrees in both degrees
  CHECK(r.conflicts[1].n == Int(-2));
  CHECK(r.conflicts[2].n == Int(-2));
  CHECK(r.conflicts[2].degree == 3);
  // recorded values stand
  CHECK(r.table.row(Int(-3)).h2 == Int(5));
}

TEST_CASE("verification passes on every built-in table") {
  for (const Fixture& f : builtin_fixtures()) {
    if (!f.table) continue;
    CAPTURE(f.name);
    std::vector<CheckResult> rs = verify_table(*f.table, f.profile);
    CHECK(verification_passed(rs));
    for (const auto& r : rs) {
      CAPTURE(r.name);
      CHECK(r.status != CheckResult::Status::Fail);
    }
  }
}

TEST_CASE("the diagnostic section-count check is non-fatal by design") {
  const Fixture& f = fixture_by_name("4.10");
  std::vector<CheckResult> rs = verify_table(*f.table, f.profile);
  const CheckResult& ns = check_named(rs, "NONSTABLE-H0");
  CHECK(ns.status == CheckResult::Status::Pass);
  CHECK_FALSE(ns.fatal);
  // positive alpha has no instability range to check
  const Fixture& g = fixture_by_name("4.2");
  const CheckResult& ns2 =
      check_named(verify_table(*g.table, g.profile), "NONSTABLE-H0");
  CHECK(ns2.status == CheckResult::Status::Skipped);
}

TEST_CASE("a forced twist recorded as zero fails verification") {
  const Fixture& f = fixture_by_name("4.2");
  CohomologyTable t = *f.table;
  t.row(Int(0)).h1 = Int(0);
  std::vector<CheckResult> rs = verify_table(t, f.profile);
  const CheckResult& forced = check_named(rs, "FORCED");
  CHECK(forced.status == CheckResult::Status::Fail);
  CHECK(forced.fatal);
  REQUIRE_FALSE(forced.details.empty());
  CHECK(forced.details[0].find("n=0") != std::string::npos);
  CHECK_FALSE(verification_passed(rs));
}

TEST_CASE("chi check fails on a corrupted count") {
  const Fixture& f = fixture_by_name("4.2");
  CohomologyTable t = *f.table;
  t.row(Int(-2)).h0 = Int(5);  // chi(E(-2)) is 1, this makes it 6
  std::vector<CheckResult> rs = verify_table(t, f.profile);
  CHECK(check_named(rs, "CHI").status == CheckResult::Status::Fail);
  CHECK_FALSE(verification_passed(rs));
}

TEST_CASE("verification requires matching Chern data") {
  const Fixture& f = fixture_by_name("4.2");
  BundleProfile other = make_profile(ChernClasses(-1, Int(4)), Int(1));
  CHECK_THROWS_AS(verify_table(*f.table, other), std::invalid_argument);
}

TEST_CASE("alpha check outside the window") {
  CohomologyTable zeros = parse_table("c1=0\nc2=6\n-2 0 1\n-1 0 2\n0 0 3\n");

  BundleProfile above = make_profile(ChernClasses(0, Int(6)), Int(5));
  CHECK(check_named(verify_table(zeros, above), "ALPHA").status ==
        CheckResult::Status::Pass);

  CohomologyTable with_section =
      parse_table("c1=0\nc2=6\n-2 0 1\n-1 1 2\n0 1 3\n");
  CHECK(check_named(verify_table(with_section, above), "ALPHA").status ==
        CheckResult::Status::Fail);

  // alpha below the window: every twist must already have sections
  CohomologyTable positive = parse_table("c1=0\nc2=-4\n0 2 0\n1 6 0\n");
  BundleProfile below = make_profile(ChernClasses(0, Int(-4)), Int(-1));
  CHECK(check_named(verify_table(positive, below), "ALPHA").status ==
        CheckResult::Status::Pass);
  CohomologyTable gap = parse_table("c1=0\nc2=-4\n0 0 0\n1 6 0\n");
  CHECK(check_named(verify_table(gap, below), "ALPHA").status ==
        CheckResult::Status::Fail);

  // no alpha in the profile: nothing to verify against
  BundleProfile bare = make_profile(ChernClasses(0, Int(6)));
  CHECK(check_named(verify_table(zeros, bare), "ALPHA").status ==
        CheckResult::Status::Skipped);
}

TEST_CASE("beta header is carried through untouched") {
  CohomologyTable t = parse_table("c1=0\nc2=4\nbeta=3\n0 1 2\n1 4 0\n");
  CHECK(t.beta == Int(3));
  CHECK(serialize(t).find("beta=3") != std::string::npos);
}
