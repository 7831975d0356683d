#include "kcrystal/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace kcrystal {

std::array<Int, 4> invariant_gram(const GroupSpec& spec) {
  std::array<Int, 4> g{0, 0, 0, 0};
  for (auto& e : spec.elements) {
    Mat2 p = e.pullback.lin.transposed() * e.pullback.lin;
    g[0] += p.a;
    g[1] += p.b;
    g[2] += p.c;
    g[3] += p.d;
  }
  return g;
}

namespace {

// the part of x0 + t dir inside [0, k]^2
std::optional<Segment> clip(const Vec2& x0, const IVec2& dir, int k) {
  std::optional<Rational> lo, hi;
  for (int i = 0; i < 2; ++i) {
    if (dir[i] == 0) {
      if (x0[i] < 0 || x0[i] > k)
        return std::nullopt;
      continue;
    }
    Rational a = (Rational(0) - x0[i]) / dir[i], b = (Rational(k) - x0[i]) / dir[i];
    if (a > b)
      std::swap(a, b);
    if (!lo || a > *lo)
      lo = a;
    if (!hi || b < *hi)
      hi = b;
  }
  if (*lo >= *hi)
    return std::nullopt;
  Vec2 d = to_vec(dir);
  return Segment{{x0[0] + *lo * d[0], x0[1] + *lo * d[1]},
                 {x0[0] + *hi * d[0], x0[1] + *hi * d[1]}};
}

bool in_box(const Vec2& p, int k) {
  return p[0] >= 0 && p[1] >= 0 && p[0] <= k && p[1] <= k;
}

bool segment_less(const Segment& x, const Segment& y) {
  if (x.from != y.from)
    return vec_less(x.from, y.from);
  return vec_less(x.to, y.to);
}

} // namespace

SymmetryElements symmetry_elements(const GroupSpec& spec, int cells) {
  if (cells < 1)
    throw DomainError("cells must be positive");
  SymmetryElements out;
  std::map<Vec2, int, decltype(&vec_less)> centers(vec_less);
  // axis key: direction and the value of the normal functional
  std::set<std::pair<IVec2, Rational>> mirrors, glides;
  std::map<std::pair<IVec2, Rational>, Vec2> base;
  const int w = 2 * cells + 2;
  for (auto& e : spec.elements) {
    const Mat2& M = e.pullback.lin;
    if (M.is_identity())
      continue;
    for (int i = -w; i <= w; ++i)
      for (int j = -w; j <= w; ++j) {
        Vec2 t = e.pullback.trans + Vec2{Rational(i), Rational(j)};
        if (M.det() == 1) {
          // (I - M) p = t
          Mat2 A = Mat2{} - M;
          Rational det(A.det());
          Vec2 p{(A.d * t[0] - A.b * t[1]) / det, (A.a * t[1] - A.c * t[0]) / det};
          if (in_box(p, cells)) {
            int& o = centers[p];
            o = std::max(o, e.lin_order);
          }
          continue;
        }
        Vec2 Mt = M * t;
        Vec2 plus{(t[0] + Mt[0]) / 2, (t[1] + Mt[1]) / 2};
        Vec2 minus{(t[0] - Mt[0]) / 2, (t[1] - Mt[1]) / 2};
        Vec2 x0{minus[0] / 2, minus[1] / 2};
        Mat2 S = M;
        S.a += 1;
        S.d += 1;
        IVec2 dir = S.a != 0 || S.c != 0 ? IVec2{S.a, S.c} : IVec2{S.b, S.d};
        Int g = gcd(dir[0], dir[1]);
        dir = {dir[0] / g, dir[1] / g};
        if (dir[0] < 0 || (dir[0] == 0 && dir[1] < 0))
          dir = {-dir[0], -dir[1]};
        IVec2 n = normal_of(dir);
        auto key = std::make_pair(dir, Rational(n[0] * x0[0] + n[1] * x0[1]));
        base.emplace(key, x0);
        (plus[0] == 0 && plus[1] == 0 ? mirrors : glides).insert(key);
      }
  }
  for (auto& [p, o] : centers)
    out.centers.push_back({p, o});
  for (auto& key : mirrors)
    if (auto s = clip(base.at(key), key.first, cells))
      out.mirrors.push_back(*s);
  for (auto& key : glides)
    if (!mirrors.count(key))
      if (auto s = clip(base.at(key), key.first, cells))
        out.glides.push_back(*s);
  std::sort(out.mirrors.begin(), out.mirrors.end(), segment_less);
  std::sort(out.glides.begin(), out.glides.end(), segment_less);
  return out;
}

namespace {

struct Frame {
  double b11, b12, b22, scale, x0, y0;

  std::pair<double, double> at(const Vec2& p) const {
    double u = p[0].get_d(), v = p[1].get_d();
    return {x0 + scale * (b11 * u + b12 * v), y0 - scale * (b22 * v)};
  }
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
  return buf;
}

std::string polygon(double cx, double cy, int sides, double r, double phase) {
  std::string pts;
  for (int i = 0; i < sides; ++i) {
    double a = phase + 2 * M_PI * i / sides;
    pts += (i ? " " : "") + num(cx + r * std::cos(a)) + "," + num(cy - r * std::sin(a));
  }
  return pts;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

} // namespace

std::string render_svg(const GroupSpec& spec, int cells) {
  SymmetryElements el = symmetry_elements(spec, cells);
  auto g = invariant_gram(spec);
  double g11 = g[0].get_d(), g12 = g[1].get_d(), g22 = g[3].get_d();
  Frame f;
  f.b11 = std::sqrt(g11);
  f.b12 = g12 / f.b11;
  f.b22 = std::sqrt(g22 - f.b12 * f.b12);
  double unit = std::min(f.b11, std::hypot(f.b12, f.b22));
  f.scale = 100.0 / unit;
  const double margin = 20;
  // bounding box of the block
  double minx = 0, maxx = 0, maxy = f.scale * f.b22 * cells;
  for (int i : {0, cells})
    for (int j : {0, cells}) {
      double x = f.scale * (f.b11 * i + f.b12 * j);
      minx = std::min(minx, x);
      maxx = std::max(maxx, x);
    }
  f.x0 = margin - minx;
  f.y0 = margin + maxy;
  double width = maxx - minx + 2 * margin, height = maxy + 2 * margin;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
     << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
     << "  <title>" << xml_escape(spec.name) << "</title>\n"
     << "  <desc>" << xml_escape(spec.lattice_hint) << "</desc>\n";
  auto line = [&](const Vec2& a, const Vec2& b, const char* cls, const char* style) {
    auto [x1, y1] = f.at(a);
    auto [x2, y2] = f.at(b);
    os << "  <line class=\"" << cls << "\" x1=\"" << num(x1) << "\" y1=\"" << num(y1)
       << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2) << "\" " << style << "/>\n";
  };
  os << "  <g id=\"lattice\">\n";
  for (int i = 0; i <= cells; ++i) {
    line({Rational(i), Rational(0)}, {Rational(i), Rational(cells)}, "lattice",
         "stroke=\"#999999\" stroke-width=\"1\"");
    line({Rational(0), Rational(i)}, {Rational(cells), Rational(i)}, "lattice",
         "stroke=\"#999999\" stroke-width=\"1\"");
  }
  os << "  </g>\n  <g id=\"mirrors\">\n";
  for (auto& s : el.mirrors)
    line(s.from, s.to, "mirror", "stroke=\"#1f4e9c\" stroke-width=\"2.5\"");
  os << "  </g>\n  <g id=\"glides\">\n";
  for (auto& s : el.glides)
    line(s.from, s.to, "glide",
         "stroke=\"#b03a2e\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"");
  os << "  </g>\n  <g id=\"centers\">\n";
  for (auto& c : el.centers) {
    auto [x, y] = f.at(c.at);
    std::string cls = "rot" + std::to_string(c.order);
    if (c.order == 2)
      os << "  <ellipse class=\"" << cls << "\" cx=\"" << num(x) << "\" cy=\"" << num(y)
         << "\" rx=\"4.00\" ry=\"6.50\" fill=\"#000000\"/>\n";
    else
      os << "  <polygon class=\"" << cls << "\" points=\""
         << polygon(x, y, c.order, 7.5, c.order == 4 ? M_PI / 4 : M_PI / 2)
         << "\" fill=\"#000000\"/>\n";
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

void write_svg(const GroupSpec& spec, const std::string& path, int cells) {
  std::string svg = render_svg(spec, cells);
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error("cannot write " + path);
  out << svg;
  if (!out)
    throw Error("cannot write " + path);
}

} // namespace kcrystal
