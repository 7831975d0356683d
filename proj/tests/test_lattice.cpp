#include <random>
#include <set>
#include <doctest.h>
#include "kcrystal/lattice.hpp"
#include "oracles.hpp"

using namespace kcrystal;

namespace {

bool solves(const Mat2& A, const Vec2& b, const Vec2& x) {
  return is_integral(A * x - b);
}

} // namespace

TEST_CASE("2x2 matrices") {
  Mat2 r{0, -1, 1, 0};
  CHECK(linear_order(r) == 4);
  CHECK(linear_order(Mat2{0, 1, -1, 1}) == 6);
  CHECK(linear_order(Mat2{1, 1, 0, 1}) == 0);
  CHECK(power(r, 4).is_identity());
  CHECK((inverse(r) * r).is_identity());
  CHECK(normal_of(IVec2{2, 1}) == IVec2{-1, 2});
}

TEST_CASE("congruences against a grid search") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-2, 2), num(0, 3);
  for (int n = 0; n < 200; ++n) {
    Mat2 A{entry(rng), entry(rng), entry(rng), entry(rng)};
    Vec2 b{oracle::ratio(num(rng), 4), oracle::ratio(num(rng), 4)};
    auto s = solve_congruence(A, b);
    std::set<std::pair<long, long>> grid;
    for (long i = 0; i < 24; ++i)
      for (long j = 0; j < 24; ++j)
        if (solves(A, b, {oracle::ratio(i, 24), oracle::ratio(j, 24)}))
          grid.insert({i, j});
    Int det = A.det();
    CAPTURE(to_string(A));
    CAPTURE(to_string(b));
    if (det != 0) {
      REQUIRE(s.kind == CongruenceSolutionSet::Kind::Points);
      CHECK(s.points.size() == Int(abs(det)).get_ui());
      for (auto& p : s.points)
        CHECK(solves(A, b, p));
      // solutions have denominators dividing 4 det
      if (24 % (4 * Int(abs(det)).get_si()) == 0)
        CHECK(grid.size() == s.points.size());
      continue;
    }
    if (A == Mat2{0, 0, 0, 0}) {
      CHECK(s.kind == (is_integral(b) ? CongruenceSolutionSet::Kind::All
                                      : CongruenceSolutionSet::Kind::Empty));
      continue;
    }
    if (grid.empty()) {
      CHECK(s.kind == CongruenceSolutionSet::Kind::Empty);
      continue;
    }
    REQUIRE(s.kind == CongruenceSolutionSet::Kind::Lines);
    for (auto& c : s.lines)
      CHECK(solves(A, b, c.base));
    // every grid solution lies on exactly one listed circle
    for (auto [i, j] : grid) {
      Vec2 x{oracle::ratio(i, 24), oracle::ratio(j, 24)};
      int hits = 0;
      for (auto& c : s.lines)
        hits += on_circle(c, x);
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("circles are canonical") {
  Circle c = make_circle({Rational(1, 3), Rational(0)}, IVec2{-2, -1});
  CHECK(c.dir == IVec2{2, 1});
  Circle d = make_circle({Rational(1, 3) + 4, Rational(2) + 5}, IVec2{2, 1});
  CHECK(c == d);
  CHECK(on_circle(c, {Rational(1, 3) + 1, Rational(1, 2)}));
  CHECK_FALSE(on_circle(c, {Rational(0), Rational(0)}));
}
