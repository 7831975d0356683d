#include "kcrystal/fixed.hpp"

namespace kcrystal {

const char* kind_name(FixedSet::Kind k) {
  switch (k) {
    case FixedSet::Kind::Empty: return "empty";
    case FixedSet::Kind::Points: return "points";
    case FixedSet::Kind::Lines: return "lines";
    case FixedSet::Kind::All: return "all";
  }
  return "?";
}

FixedSet::Kind parse_fixed_kind(std::string_view s) {
  for (auto k : {FixedSet::Kind::Empty, FixedSet::Kind::Points, FixedSet::Kind::Lines,
                 FixedSet::Kind::All})
    if (s == kind_name(k))
      return k;
  throw ParseError("unknown fixed-set kind '" + std::string(s) + "'");
}

namespace {

Mat2 one_minus(const Mat2& m) { return Mat2{1 - m.a, -m.b, -m.c, 1 - m.d}; }

// primitive integer vector spanning {w : M w = w}, M a reflection
IVec2 axis_direction(const Mat2& m) {
  Mat2 s{m.a + 1, m.b, m.c, m.d + 1};
  IVec2 w = (s.a != 0 || s.c != 0) ? IVec2{s.a, s.c} : IVec2{s.b, s.d};
  Int g = gcd(w[0], w[1]);
  w[0] /= g;
  w[1] /= g;
  if (w[0] < 0 || (w[0] == 0 && w[1] < 0)) {
    w[0] = -w[0];
    w[1] = -w[1];
  }
  return w;
}

bool commutes(const Mat2& x, const Mat2& y) { return x * y == y * x; }

} // namespace

FixedSet fixed_set_plane(const AffineIso& g) {
  FixedSet fs;
  fs.space = Mode::Plane;
  if (g.lin.is_identity()) {
    if (g.trans[0] != 0 || g.trans[1] != 0)
      throw DomainError("translation " + to_string(g) + " has infinite order");
    fs.kind = FixedSet::Kind::All;
    return fs;
  }
  Mat2 a = one_minus(g.lin);
  Int det = a.det();
  if (det != 0) {
    Mat2 adj{a.d, -a.b, -a.c, a.a};
    Vec2 x = adj * g.trans;
    fs.kind = FixedSet::Kind::Points;
    fs.points.push_back(Vec2{Rational(x[0] / det), Rational(x[1] / det)});
    return fs;
  }
  Mat2 s{g.lin.a + 1, g.lin.b, g.lin.c, g.lin.d + 1};
  Vec2 check = s * g.trans;
  if (check[0] != 0 || check[1] != 0)
    throw DomainError("glide " + to_string(g) + " has infinite order");
  fs.kind = FixedSet::Kind::Lines;
  fs.lines.push_back(Circle{Vec2{Rational(g.trans[0] / 2), Rational(g.trans[1] / 2)},
                            axis_direction(g.lin)});
  return fs;
}

FixedSet fixed_set_torus(const AffineIso& g) {
  auto sol = solve_congruence(one_minus(g.lin), g.trans);
  FixedSet fs;
  fs.space = Mode::Torus;
  switch (sol.kind) {
    case CongruenceSolutionSet::Kind::Empty: fs.kind = FixedSet::Kind::Empty; break;
    case CongruenceSolutionSet::Kind::Points: fs.kind = FixedSet::Kind::Points; break;
    case CongruenceSolutionSet::Kind::Lines: fs.kind = FixedSet::Kind::Lines; break;
    case CongruenceSolutionSet::Kind::All: fs.kind = FixedSet::Kind::All; break;
  }
  fs.points = std::move(sol.points);
  fs.lines = std::move(sol.lines);
  return fs;
}

FixedSet fixed_set(const ConjClass& c) {
  return c.mode == Mode::Plane ? fixed_set_plane(c.rep) : fixed_set_torus(c.rep);
}

Centralizer centralizer(const AffineIso& g, const GroupSpec& spec, Mode mode) {
  Centralizer c;
  if (mode == Mode::Torus) {
    for (auto& e : spec.elements)
      if (commutes(e.pullback.lin, g.lin))
        c.finite_parts.push_back(e.pullback);
    return c;
  }
  FixedSet fs = fixed_set_plane(g);
  if (fs.kind == FixedSet::Kind::All) {
    c.trans_rank = 2;
    c.trans_basis = {IVec2{Int(1), Int(0)}, IVec2{Int(0), Int(1)}};
    for (auto& e : spec.elements)
      c.finite_parts.push_back(e.pullback);
    return c;
  }
  if (fs.kind == FixedSet::Kind::Points) {
    const Vec2& x = fs.points[0];
    for (auto& e : spec.elements) {
      if (!commutes(e.pullback.lin, g.lin))
        continue;
      // the lift of e fixing x, if it lies in G
      Vec2 v = x - e.pullback.lin * x;
      if (is_integral(v - e.pullback.trans))
        c.finite_parts.push_back(AffineIso{v, e.pullback.lin});
    }
    return c;
  }
  const Circle& line = fs.lines[0];
  c.trans_rank = 1;
  c.trans_basis = {line.dir};
  IVec2 phi = normal_of(line.dir);
  IntMat row(1, 2);
  row.at(0, 0) = phi[0];
  row.at(0, 1) = phi[1];
  for (auto& e : spec.elements) {
    if (!commutes(e.pullback.lin, g.lin))
      continue;
    // a with phi(e(p) + a - p) = 0, so that t(a) e keeps the axis
    Vec2 off = e.pullback.apply(line.base) - line.base;
    Rational r = -(phi[0] * off[0] + phi[1] * off[1]);
    if (!is_integer(r))
      continue;
    auto sol = solve_integer(row, {r.get_num()});
    if (!sol.solvable)
      continue;
    Vec2 a{Rational(sol.particular[0]), Rational(sol.particular[1])};
    c.finite_parts.push_back(AffineIso{e.pullback.trans + a, e.pullback.lin});
  }
  return c;
}

} // namespace kcrystal
