#include "kcrystal/lattice.hpp"

#include <algorithm>
#include <tuple>

namespace kcrystal {

bool Mat2::operator<(const Mat2& o) const {
  return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
}

IntMat Mat2::to_intmat() const {
  IntMat m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
              x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 operator-(const Mat2& x, const Mat2& y) {
  return Mat2{x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

Vec2 operator*(const Mat2& m, const Vec2& v) {
  return Vec2{Rational(m.a * v[0] + m.b * v[1]), Rational(m.c * v[0] + m.d * v[1])};
}

IVec2 operator*(const Mat2& m, const IVec2& v) {
  return IVec2{Int(m.a * v[0] + m.b * v[1]), Int(m.c * v[0] + m.d * v[1])};
}

Vec2 operator+(const Vec2& x, const Vec2& y) {
  return Vec2{Rational(x[0] + y[0]), Rational(x[1] + y[1])};
}
Vec2 operator-(const Vec2& x, const Vec2& y) {
  return Vec2{Rational(x[0] - y[0]), Rational(x[1] - y[1])};
}
Vec2 operator-(const Vec2& x) { return Vec2{Rational(-x[0]), Rational(-x[1])}; }
Vec2 to_vec(const IVec2& v) { return Vec2{Rational(v[0]), Rational(v[1])}; }

Mat2 inverse(const Mat2& m) {
  Int det = m.det();
  if (det != 1 && det != -1)
    throw DomainError("matrix not invertible over Z: " + to_string(m));
  return Mat2{m.d * det, -m.b * det, -m.c * det, m.a * det};
}

Mat2 power(const Mat2& m, int k) {
  Mat2 r;
  Mat2 base = k < 0 ? inverse(m) : m;
  for (int i = 0; i < (k < 0 ? -k : k); ++i)
    r = r * base;
  return r;
}

int linear_order(const Mat2& m) {
  Mat2 p = m;
  for (int k = 1; k <= 12; ++k) {
    if (p.is_identity())
      return k;
    p = p * m;
  }
  return 0;
}

Vec2 frac(const Vec2& v) { return Vec2{frac(v[0]), frac(v[1])}; }
bool is_integral(const Vec2& v) { return is_integer(v[0]) && is_integer(v[1]); }
bool vec_less(const Vec2& x, const Vec2& y) {
  return x[0] != y[0] ? x[0] < y[0] : x[1] < y[1];
}

std::string to_string(const Vec2& v) {
  return "(" + to_string(v[0]) + "," + to_string(v[1]) + ")";
}
std::string to_string(const IVec2& v) {
  return "(" + v[0].get_str() + "," + v[1].get_str() + ")";
}
std::string to_string(const Mat2& m) {
  return "[[" + m.a.get_str() + "," + m.b.get_str() + "],[" + m.c.get_str() +
         "," + m.d.get_str() + "]]";
}

bool Circle::operator<(const Circle& o) const {
  if (dir != o.dir)
    return dir < o.dir;
  return vec_less(base, o.base);
}

IVec2 normal_of(const IVec2& dir) { return IVec2{Int(-dir[1]), dir[0]}; }

Circle make_circle(const Vec2& point, const IVec2& dir_in) {
  IVec2 dir = dir_in;
  Int g = gcd(dir[0], dir[1]);
  if (g == 0)
    fail("make_circle: zero direction");
  dir[0] /= g;
  dir[1] /= g;
  if (dir[0] < 0 || (dir[0] == 0 && dir[1] < 0)) {
    dir[0] = -dir[0];
    dir[1] = -dir[1];
  }
  IVec2 phi = normal_of(dir);
  Rational key = frac(Rational(phi[0] * point[0] + phi[1] * point[1]));
  // m with phi(m) = 1
  Int s, t, gg;
  mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), phi[0].get_mpz_t(),
             phi[1].get_mpz_t());
  if (gg < 0) {
    s = -s;
    t = -t;
  }
  Vec2 base{Rational(key * s), Rational(key * t)};
  return Circle{frac(base), dir};
}

bool on_circle(const Circle& c, const Vec2& x) {
  IVec2 phi = normal_of(c.dir);
  Rational v = phi[0] * (x[0] - c.base[0]) + phi[1] * (x[1] - c.base[1]);
  return is_integer(v);
}

const char* kind_name(CongruenceSolutionSet::Kind k) {
  switch (k) {
    case CongruenceSolutionSet::Kind::Empty: return "empty";
    case CongruenceSolutionSet::Kind::Points: return "points";
    case CongruenceSolutionSet::Kind::Lines: return "lines";
    case CongruenceSolutionSet::Kind::All: return "all";
  }
  return "?";
}

CongruenceSolutionSet solve_congruence(const Mat2& A, const Vec2& b) {
  using Kind = CongruenceSolutionSet::Kind;
  Snf s = smith_normal_form(A.to_intmat());
  Int d1 = s.D.at(0, 0), d2 = s.D.at(1, 1);
  Vec2 c{Rational(s.U.at(0, 0) * b[0] + s.U.at(0, 1) * b[1]),
         Rational(s.U.at(1, 0) * b[0] + s.U.at(1, 1) * b[1])};
  Mat2 V{s.V.at(0, 0), s.V.at(0, 1), s.V.at(1, 0), s.V.at(1, 1)};
  CongruenceSolutionSet out;
  if (d1 == 0) {
    out.kind = is_integral(c) ? Kind::All : Kind::Empty;
    return out;
  }
  if (d2 == 0) {
    if (!is_integer(c[1]))
      return out;
    IVec2 dir{V.b, V.d};
    for (Int k = 0; k < d1; ++k) {
      Vec2 y{Rational((c[0] + k) / d1), Rational(0)};
      out.lines.push_back(make_circle(V * y, dir));
    }
    std::sort(out.lines.begin(), out.lines.end());
    out.lines.erase(std::unique(out.lines.begin(), out.lines.end()), out.lines.end());
    out.kind = Kind::Lines;
    return out;
  }
  for (Int i = 0; i < d1; ++i)
    for (Int j = 0; j < d2; ++j) {
      Vec2 y{Rational((c[0] + i) / d1), Rational((c[1] + j) / d2)};
      out.points.push_back(frac(V * y));
    }
  std::sort(out.points.begin(), out.points.end(), vec_less);
  out.kind = Kind::Points;
  return out;
}

} // namespace kcrystal
