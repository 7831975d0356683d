#include <set>
#include <doctest.h>
#include "kcrystal/verify.hpp"

using namespace kcrystal;

namespace {

const char* kTiny = R"(# comment
group pm plane
  headline Z^3 | Z^3
  row id | all | surface annulus | 0 | Z
  row ρ | lines (x,0) | segs (x,0)[0,2] | Z | 0
end
)";

GroupFixture modified(const char* group, FinAbGroup k0) {
  GroupFixture fx = fixture(group);
  fx.K0 = k0;
  return fx;
}

} // namespace

TEST_CASE("fixture text round-trips") {
  const auto& fx = shipped_fixtures();
  REQUIRE(fx.size() == 17);
  CHECK(parse_fixtures(format_fixtures(fx)) == fx);
  auto tiny = parse_fixtures(kTiny);
  REQUIRE(tiny.size() == 1);
  CHECK(tiny[0].mode == Mode::Plane);
  CHECK(tiny[0].rows.size() == 2);
  CHECK(tiny[0].rows[1].q.kind == DisplaySet::Kind::Segments);
}

TEST_CASE("fixture parse errors carry the line") {
  try {
    parse_fixtures("group pm plane\n  headline Z^3\nend\n");
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_fixtures("group pm plane\n"), ParseError);
  CHECK_THROWS_AS(parse_fixtures("row id | all | fd | Z | 0\n"), ParseError);
  CHECK_THROWS_AS(fixture("nosuch"), NotFound);
}

TEST_CASE("printed coordinates") {
  CHECK(torus_point({Rational(1), Rational(1)}) == Vec2{Rational(1, 2), Rational(1, 2)});
  CHECK(torus_point({Rational(-1), Rational(0)}) == Vec2{Rational(1, 2), Rational(0)});
  CHECK(torus_point({Rational(-1, 3), Rational(0)}) == Vec2{Rational(5, 6), Rational(0)});
  DisplaySet pts{DisplaySet::Kind::Points, false, "", {"(±1,±1)", "(0,0)"}};
  CHECK(display_points(pts).size() == 5);
  auto segs = parse_fixtures(kTiny)[0].rows[1].q;
  auto lines = display_lines(segs);
  REQUIRE(lines.size() == 1);
  CHECK(segment_is_circle(lines[0]));
  CHECK(torus_circle(lines[0]).dir == IVec2{1, 0});
}

TEST_CASE("shipped fixtures verify") {
  auto reports = verify_against_tables();
  REQUIRE(reports.size() == 17);
  for (auto& r : reports) {
    CAPTURE(r.group);
    CHECK(r.ok());
    // every table row is compared
    std::set<std::string> seen;
    for (auto& it : r.items)
      if (it.level == ItemLevel::Row)
        seen.insert(it.label);
    for (auto& row : r.fixture.rows)
      CHECK(seen.count(row.label) == 1);
    // every annotation fires
    for (auto& it : r.items)
      CHECK(it.field != "expect");
    size_t expected = 0;
    for (auto& it : r.items)
      expected += it.status == ItemStatus::ExpectedDiscrepancy;
    CHECK(expected == r.fixture.expects.size());
  }
}

TEST_CASE("plain groups match") {
  auto r = verify_against_tables("pm");
  REQUIRE(r.size() == 1);
  CHECK(r[0].count(ItemStatus::Discrepancy) == 0);
  CHECK(r[0].count(ItemStatus::ExpectedDiscrepancy) == 0);
  CHECK(r[0].count(ItemStatus::Note) == 0);
  CHECK_THROWS_AS(verify_against_tables("nosuch"), NotFound);
}

TEST_CASE("corrupted fixtures fail") {
  auto r = verify_group(catalog("p2"), modified("p2", parse_abgroup("Z^5")));
  CHECK_FALSE(r.ok());
  GroupFixture fx = fixture("pm");
  fx.rows[0].odd = parse_abgroup("Z^2");
  CHECK_FALSE(verify_group(catalog("pm"), fx).ok());
  fx = fixture("pm");
  fx.rows.pop_back();
  CHECK_FALSE(verify_group(catalog("pm"), fx).ok());
}

TEST_CASE("annotations") {
  // an annotation that does not fire is itself a discrepancy
  GroupFixture fx = fixture("pm");
  fx.expects.push_back({"headline", "-", "K0", "here", "nothing"});
  auto r = verify_group(catalog("pm"), fx);
  CHECK_FALSE(r.ok());
  bool found = false;
  for (auto& it : r.items)
    found |= it.field == "expect" && it.status == ItemStatus::Discrepancy;
  CHECK(found);
  // removing one turns the item back into a discrepancy
  fx = fixture("cm");
  fx.expects.clear();
  CHECK_FALSE(verify_group(catalog("cm"), fx).ok());
}

TEST_CASE("level and status names") {
  for (auto l : {ItemLevel::Headline, ItemLevel::Row, ItemLevel::Display, ItemLevel::Label})
    CHECK(parse_level(level_name(l)) == l);
  for (auto s : {ItemStatus::Match, ItemStatus::Discrepancy, ItemStatus::ExpectedDiscrepancy,
                 ItemStatus::Note})
    CHECK(parse_status(status_name(s)) == s);
}
