// Reference per-class tables and headline K-groups (data/fixtures.txt).
#ifndef KCRYSTAL_FIXTURES_HPP_
#define KCRYSTAL_FIXTURES_HPP_

#include <string>
#include <string_view>
#include <vector>
#include "torsion.hpp"

namespace kcrystal {

// An X^g or X^g/C entry as printed. Items keep their text; the helpers
// below interpret them.
struct DisplaySet {
  enum class Kind { All, FundamentalDomain, Surface, Points, Lines, Segments, Circle };
  Kind kind = Kind::All;
  bool same = false;     // written "same": copied from the previous row
  std::string surface;   // Kind::Surface
  std::vector<std::string> items;

  bool operator==(const DisplaySet& o) const {
    return kind == o.kind && same == o.same && surface == o.surface && items == o.items;
  }
};

const char* kind_name(DisplaySet::Kind k);

// (offset + t * coef), in printed [-1,1]^2 coordinates
struct DisplayLine {
  Vec2 offset, coef;
  Rational lo = 0, hi = 0;  // segments only
};

// "±" expanded, one entry per printed point
std::vector<Vec2> display_points(const DisplaySet& s);
std::vector<DisplayLine> display_lines(const DisplaySet& s);
// printed coordinates p -> p/2 mod 1
Vec2 torus_point(const Vec2& p);
Circle torus_circle(const DisplayLine& l);
// a segment is closed on T^2 when it spans a whole period
bool segment_is_circle(const DisplayLine& l);

struct FixtureRow {
  std::string label;
  DisplaySet x, q;
  FinAbGroup even, odd;

  bool operator==(const FixtureRow& o) const {
    return label == o.label && x == o.x && q == o.q && even == o.even && odd == o.odd;
  }
};

struct Expectation {
  std::string level;  // headline | row | display
  std::string label;  // "-" for headline items
  std::string field;
  std::string location;
  std::string reason;

  bool operator==(const Expectation& o) const {
    return level == o.level && label == o.label && field == o.field &&
           location == o.location && reason == o.reason;
  }
};

struct GroupFixture {
  std::string group;
  Mode mode = Mode::Plane;
  FinAbGroup K0, K1;
  std::vector<FixtureRow> rows;
  std::vector<Expectation> expects;
  bool claim_fc_equal = false;

  bool operator==(const GroupFixture& o) const {
    return group == o.group && mode == o.mode && K0 == o.K0 && K1 == o.K1 &&
           rows == o.rows && expects == o.expects && claim_fc_equal == o.claim_fc_equal;
  }
};

std::vector<GroupFixture> parse_fixtures(std::string_view text);
std::string format_fixtures(const std::vector<GroupFixture>& fx);
// the shipped data file
const std::vector<GroupFixture>& shipped_fixtures();
const GroupFixture& fixture(std::string_view group);

} // namespace kcrystal
#endif
