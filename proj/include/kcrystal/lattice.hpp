// Two-dimensional lattice arithmetic and congruences A x = b (mod Z^2).
#ifndef KCRYSTAL_LATTICE_HPP_
#define KCRYSTAL_LATTICE_HPP_

#include <array>
#include <string>
#include <vector>
#include "algebra.hpp"

namespace kcrystal {

using Vec2 = std::array<Rational, 2>;
using IVec2 = std::array<Int, 2>;

struct Mat2 {
  Int a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]

  static Mat2 identity() { return Mat2{}; }
  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }
  Mat2 transposed() const { return Mat2{a, c, b, d}; }
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  bool operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator!=(const Mat2& o) const { return !(*this == o); }
  bool operator<(const Mat2& o) const;
  IntMat to_intmat() const;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x, const Mat2& y);
Vec2 operator*(const Mat2& m, const Vec2& v);
IVec2 operator*(const Mat2& m, const IVec2& v);
Vec2 operator+(const Vec2& x, const Vec2& y);
Vec2 operator-(const Vec2& x, const Vec2& y);
Vec2 operator-(const Vec2& x);
Vec2 to_vec(const IVec2& v);
Mat2 inverse(const Mat2& m);  // requires det = +-1
Mat2 power(const Mat2& m, int k);
// multiplicative order if finite (at most 12), else 0
int linear_order(const Mat2& m);

Vec2 frac(const Vec2& v);
bool is_integral(const Vec2& v);
bool vec_less(const Vec2& x, const Vec2& y);
std::string to_string(const Vec2& v);
std::string to_string(const IVec2& v);
std::string to_string(const Mat2& m);

// A closed geodesic on T^2: the image of base + R*dir. dir is primitive
// with its first nonzero coordinate positive; base is reduced so that equal
// circles have equal representations.
struct Circle {
  Vec2 base;
  IVec2 dir;
  bool operator==(const Circle& o) const { return base == o.base && dir == o.dir; }
  bool operator<(const Circle& o) const;
};

// The integer functional vanishing on dir, (-dir2, dir1).
IVec2 normal_of(const IVec2& dir);
Circle make_circle(const Vec2& point, const IVec2& dir);
bool on_circle(const Circle& c, const Vec2& x);

struct CongruenceSolutionSet {
  enum class Kind { Empty, Points, Lines, All };
  Kind kind = Kind::Empty;
  std::vector<Vec2> points;   // in [0,1)^2, sorted
  std::vector<Circle> lines;  // sorted
};

const char* kind_name(CongruenceSolutionSet::Kind k);

// Solutions x mod Z^2 of A x = b mod Z^2.
CongruenceSolutionSet solve_congruence(const Mat2& A, const Vec2& b);

} // namespace kcrystal
#endif
