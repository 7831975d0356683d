#include <set>
#include <doctest.h>
#include "kcrystal/fixed.hpp"
#include "oracles.hpp"

using namespace kcrystal;

namespace {

oracle::Pt grid_point(const Vec2& v) {
  return {Rational(v[0] * 24).get_num().get_si(), Rational(v[1] * 24).get_num().get_si()};
}

} // namespace

TEST_CASE("torus fixed sets against a grid search") {
  for (auto& spec : full_catalog())
    for (auto& e : spec.elements) {
      CAPTURE(spec.name);
      CAPTURE(e.label);
      FixedSet fs = fixed_set_torus(e.pullback);
      oracle::Aff g = oracle::from(e.pullback);
      auto grid = oracle::grid_fixed(g);
      std::set<oracle::Pt> expected(grid.begin(), grid.end());
      switch (fs.kind) {
        case FixedSet::Kind::All:
          CHECK(e.pullback.lin.is_identity());
          CHECK(expected.size() == 24 * 24);
          break;
        case FixedSet::Kind::Empty:
          CHECK(expected.empty());
          break;
        case FixedSet::Kind::Points: {
          std::set<oracle::Pt> got;
          for (auto& p : fs.points)
            got.insert(grid_point(p));
          CHECK(got == expected);
          break;
        }
        case FixedSet::Kind::Lines: {
          std::set<oracle::Pt> got;
          for (long i = 0; i < 24; ++i)
            for (long j = 0; j < 24; ++j)
              for (auto& c : fs.lines)
                if (on_circle(c, {oracle::ratio(i, 24), oracle::ratio(j, 24)}))
                  got.insert({i, j});
          CHECK(got == expected);
          CHECK(fs.lines.size() == size_t(oracle::grid_circles(g)));
          break;
        }
      }
    }
}

TEST_CASE("plane fixed sets") {
  for (auto& spec : full_catalog())
    for (auto& c : enumerate_fc(spec, Mode::Plane)) {
      FixedSet fs = fixed_set(c);
      CAPTURE(spec.name);
      CAPTURE(c.label);
      switch (c.kind) {
        case ClassKind::Identity: CHECK(fs.kind == FixedSet::Kind::All); break;
        case ClassKind::Rotation:
          REQUIRE(fs.points.size() == 1);
          CHECK(c.rep.apply(fs.points[0]) == fs.points[0]);
          break;
        default:
          REQUIRE(fs.lines.size() == 1);
          for (int t = -2; t <= 2; ++t) {
            Vec2 p = fs.lines[0].base + Vec2{Rational(t) * fs.lines[0].dir[0],
                                             Rational(t) * fs.lines[0].dir[1]};
            CHECK(c.rep.apply(p) == p);
          }
      }
    }
  CHECK_THROWS_AS(fixed_set_plane(catalog("pg")[1].pullback), DomainError);
}

TEST_CASE("plane centralizers against brute force") {
  for (auto& spec : full_catalog())
    for (auto& c : enumerate_fc(spec, Mode::Plane)) {
      CAPTURE(spec.name);
      CAPTURE(c.label);
      Centralizer z = centralizer(c.rep, spec, Mode::Plane);
      auto expected = oracle::plane_centralizer(spec, c.rep);
      CHECK(z.trans_rank == expected.trans_rank);
      CHECK(z.finite_parts.size() == size_t(expected.cosets));
      for (auto& h : z.finite_parts)
        CHECK(compose(h, c.rep) == compose(c.rep, h));
    }
}

TEST_CASE("torus centralizers") {
  for (auto& spec : full_catalog())
    for (auto& c : enumerate_fc(spec, Mode::Torus)) {
      const Mat2& M = spec[c.element].pullback.lin;
      size_t expected = 0;
      for (auto& e : spec.elements)
        expected += e.pullback.lin * M == M * e.pullback.lin;
      CHECK(centralizer(c.rep, spec, Mode::Torus).finite_parts.size() == expected);
    }
}
