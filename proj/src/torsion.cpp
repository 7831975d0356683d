#include "kcrystal/torsion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <tuple>

namespace kcrystal {

const char* mode_name(Mode m) { return m == Mode::Plane ? "plane" : "torus"; }

Mode parse_mode(std::string_view s) {
  if (s == "plane")
    return Mode::Plane;
  if (s == "torus")
    return Mode::Torus;
  throw ParseError("unknown mode '" + std::string(s) + "' (plane|torus)");
}

const char* kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::Identity: return "identity";
    case ClassKind::Rotation: return "rotation";
    case ClassKind::Reflection: return "reflection";
    case ClassKind::Glide: return "glide";
  }
  return "?";
}

ClassKind parse_class_kind(std::string_view s) {
  for (ClassKind k : {ClassKind::Identity, ClassKind::Rotation, ClassKind::Reflection,
                      ClassKind::Glide})
    if (s == kind_name(k))
      return k;
  throw ParseError("unknown class kind '" + std::string(s) + "'");
}

bool ConjClass::operator==(const ConjClass& o) const {
  return mode == o.mode && rep == o.rep && order == o.order && kind == o.kind &&
         center == o.center && axis == o.axis && label == o.label &&
         element == o.element && members == o.members;
}

namespace {

ClassKind class_kind(ElementKind k) {
  switch (k) {
    case ElementKind::Identity: return ClassKind::Identity;
    case ElementKind::Rotation: return ClassKind::Rotation;
    case ElementKind::Reflection: return ClassKind::Reflection;
    case ElementKind::Glide: return ClassKind::Glide;
  }
  return ClassKind::Identity;
}

Mat2 one_minus(const Mat2& m) { return Mat2{1 - m.a, -m.b, -m.c, 1 - m.d}; }

// A connected component of the torus fixed set of one point-group element:
// a single point or a circle. Plane classes are D-orbits of these.
struct Component {
  size_t d = 0;
  bool point = true;
  Vec2 p;
  Circle circle;

  bool operator<(const Component& o) const {
    if (d != o.d)
      return d < o.d;
    if (point != o.point)
      return point;
    return point ? vec_less(p, o.p) : circle < o.circle;
  }
  bool operator==(const Component& o) const {
    return d == o.d && point == o.point && (point ? p == o.p : circle == o.circle);
  }
};

std::vector<Component> components_of(const GroupSpec& spec, size_t d) {
  const AffineIso& g = spec[d].pullback;
  std::vector<Component> out;
  auto sol = solve_congruence(one_minus(g.lin), g.trans);
  for (auto& p : sol.points)
    out.push_back(Component{d, true, p, {}});
  for (auto& c : sol.lines)
    out.push_back(Component{d, false, {}, c});
  return out;
}

Component act(const GroupSpec& spec, size_t e, const Component& c) {
  const AffineIso& ge = spec[e].pullback;
  Component r;
  r.d = spec.find(ge.lin * spec[c.d].pullback.lin * inverse(ge.lin));
  r.point = c.point;
  if (c.point)
    r.p = frac(ge.apply(c.p));
  else
    r.circle = make_circle(ge.apply(c.circle.base), ge.lin * c.circle.dir);
  return r;
}

// the plane element over c.d fixing the component
AffineIso element_of(const GroupSpec& spec, const Component& c) {
  const Mat2& m = spec[c.d].pullback.lin;
  const Vec2& x = c.point ? c.p : c.circle.base;
  return AffineIso{one_minus(m) * x, m};
}

int plane_order(const AffineIso& g) {
  auto o = order(g);
  return o.plane ? *o.plane : 0;
}

using Key = std::tuple<int, int, Rational, Rational, Int, Int, Int, Int>;

Key key_of(const AffineIso& g) {
  int kind = g.lin.is_identity() ? 0 : g.lin.det() == 1 ? 1 : 2;
  return Key{plane_order(g), kind, g.trans[0], g.trans[1],
             g.lin.a, g.lin.b, g.lin.c, g.lin.d};
}

// component of a finite-order plane element
Component component_of(const GroupSpec& spec, const AffineIso& g) {
  size_t d = spec.find(g.lin);
  if (d == GroupSpec::npos || !is_integral(g.trans - spec[d].pullback.trans))
    throw DomainError("element " + to_string(g) + " is not in " + spec.name);
  if (!plane_order(g))
    throw DomainError("element " + to_string(g) + " has infinite order");
  Component c;
  c.d = d;
  if (g.lin.is_identity())
    return c;
  Mat2 a = one_minus(g.lin);
  if (a.det() != 0) {
    // unique fixed point
    Int det = a.det();
    Mat2 adj{a.d, -a.b, -a.c, a.a};
    Vec2 x = adj * g.trans;
    c.p = frac(Vec2{Rational(x[0] / det), Rational(x[1] / det)});
  } else {
    // reflection: fixed line through trans/2, direction ker(I - M)
    Vec2 p0{Rational(g.trans[0] / 2), Rational(g.trans[1] / 2)};
    // ker(I - M) is spanned by the columns of I + M
    Mat2 s{g.lin.a + 1, g.lin.b, g.lin.c, g.lin.d + 1};
    IVec2 w = (s.a != 0 || s.c != 0) ? IVec2{s.a, s.c} : IVec2{s.b, s.d};
    c.point = false;
    c.circle = make_circle(p0, w);
  }
  return c;
}

struct PlaneOrbits {
  std::vector<Component> comps;
  std::vector<int> orbit;  // per component
  int count = 0;
};

PlaneOrbits plane_orbits(const GroupSpec& spec) {
  PlaneOrbits r;
  for (size_t d = 0; d < spec.size(); ++d)
    if (spec[d].kind != ElementKind::Identity) {
      auto cs = components_of(spec, d);
      r.comps.insert(r.comps.end(), cs.begin(), cs.end());
    }
  std::sort(r.comps.begin(), r.comps.end());
  r.orbit.assign(r.comps.size(), -1);
  auto index = [&](const Component& c) {
    auto it = std::lower_bound(r.comps.begin(), r.comps.end(), c);
    if (it == r.comps.end() || !(*it == c))
      fail("internal: component image not found in " + spec.name);
    return size_t(it - r.comps.begin());
  };
  for (size_t i = 0; i < r.comps.size(); ++i) {
    if (r.orbit[i] >= 0)
      continue;
    for (size_t e = 0; e < spec.size(); ++e)
      r.orbit[index(act(spec, e, r.comps[i]))] = r.count;
    ++r.count;
  }
  return r;
}

std::string coefficient(const Int& n, const char* sym) {
  if (n == 1)
    return sym;
  if (n == -1)
    return std::string("-") + sym;
  return n.get_str() + sym;
}

} // namespace

std::vector<AffineIso> finite_order_translates(const GroupSpec& spec, size_t d,
                                               int window) {
  const AffineIso& g = spec[d].pullback;
  int k = spec[d].lin_order;
  std::vector<AffineIso> out;
  if (k == 0)
    return out;
  for (int i = -window; i <= window; ++i)
    for (int j = -window; j <= window; ++j) {
      Vec2 v = g.trans + Vec2{Rational(i), Rational(j)};
      Vec2 sum{Rational(0), Rational(0)};
      Vec2 term = v;
      for (int n = 0; n < k; ++n) {
        sum = sum + term;
        term = g.lin * term;
      }
      if (sum[0] == 0 && sum[1] == 0)
        out.push_back(AffineIso{v, g.lin});
    }
  return out;
}

std::vector<ConjClass> enumerate_fc(const GroupSpec& spec, Mode mode, int window) {
  std::vector<ConjClass> out;
  if (mode == Mode::Torus) {
    std::vector<bool> seen(spec.size(), false);
    for (size_t d = 0; d < spec.size(); ++d) {
      if (seen[d])
        continue;
      ConjClass c;
      c.mode = Mode::Torus;
      for (size_t e = 0; e < spec.size(); ++e) {
        const Mat2& me = spec[e].pullback.lin;
        size_t k = spec.find(me * spec[d].pullback.lin * inverse(me));
        if (!seen[k]) {
          seen[k] = true;
          c.members.push_back(k);
        }
      }
      std::sort(c.members.begin(), c.members.end());
      c.element = d;
      c.rep = spec[d].pullback;
      c.order = spec[d].lin_order;
      c.kind = class_kind(spec[d].kind);
      c.label = spec[d].label;
      out.push_back(std::move(c));
    }
    return out;
  }

  PlaneOrbits po = plane_orbits(spec);
  // every component must be reached by a finite-order translate; skewed
  // bases need a wider window than the catalog one
  int w = window;
  for (;; w *= 2) {
    std::vector<bool> hit(po.comps.size(), false);
    for (size_t d = 0; d < spec.size(); ++d) {
      if (spec[d].kind == ElementKind::Identity)
        continue;
      for (const AffineIso& g : finite_order_translates(spec, d, w)) {
        Component c = component_of(spec, g);
        auto it = std::lower_bound(po.comps.begin(), po.comps.end(), c);
        if (it == po.comps.end() || !(*it == c))
          fail("internal: translate " + to_string(g) + " has no torus component");
        hit[it - po.comps.begin()] = true;
      }
    }
    if (std::find(hit.begin(), hit.end(), false) == hit.end())
      break;
    if (w >= 64)
      fail("enumerate_fc: window " + std::to_string(w) + " too small for " + spec.name);
  }

  ConjClass id;
  id.mode = Mode::Plane;
  id.label = "id";
  out.push_back(id);
  for (int o = 0; o < po.count; ++o) {
    std::optional<Key> best;
    size_t best_i = 0;
    for (size_t i = 0; i < po.comps.size(); ++i)
      if (po.orbit[i] == o) {
        Key k = key_of(element_of(spec, po.comps[i]));
        if (!best || k < *best) {
          best = k;
          best_i = i;
        }
      }
    const Component& c = po.comps[best_i];
    ConjClass cc;
    cc.mode = Mode::Plane;
    cc.rep = element_of(spec, c);
    cc.element = c.d;
    cc.order = plane_order(cc.rep);
    cc.kind = c.point ? ClassKind::Rotation : ClassKind::Reflection;
    if (c.point)
      cc.center = c.p;
    else
      cc.axis = c.circle;
    cc.label = element_label(spec, cc.rep);
    out.push_back(std::move(cc));
  }
  std::sort(out.begin() + 1, out.end(), [](const ConjClass& x, const ConjClass& y) {
    return key_of(x.rep) < key_of(y.rep);
  });
  return out;
}

AffineIso canonical_rep(const GroupSpec& spec, const AffineIso& g) {
  if (g.lin.is_identity()) {
    if (g.trans[0] != 0 || g.trans[1] != 0)
      throw DomainError("translation " + to_string(g) + " has infinite order");
    return g;
  }
  Component c = component_of(spec, g);
  std::optional<Key> best;
  AffineIso rep;
  for (size_t e = 0; e < spec.size(); ++e) {
    AffineIso h = element_of(spec, act(spec, e, c));
    Key k = key_of(h);
    if (!best || k < *best) {
      best = k;
      rep = h;
    }
  }
  return rep;
}

bool class_equal(const AffineIso& g, const AffineIso& h, const GroupSpec& spec,
                 int window) {
  if (g == h)
    return true;
  for (const auto& el : spec.elements)
    for (int i = -window; i <= window; ++i)
      for (int j = -window; j <= window; ++j) {
        AffineIso x = compose(AffineIso::translation({Int(i), Int(j)}), el.pullback);
        if (conjugate(x, g) == h)
          return true;
      }
  return false;
}

std::string element_label(const GroupSpec& spec, const AffineIso& g) {
  size_t d = spec.find(g.lin);
  if (d == GroupSpec::npos)
    return to_string(g);
  Vec2 a = g.trans - spec[d].pullback.trans;
  if (!is_integral(a))
    return to_string(g);
  std::vector<std::string> parts;
  if (a[1] != 0)
    parts.push_back(coefficient(a[1].get_num(), "s"));
  if (a[0] != 0)
    parts.push_back(coefficient(a[0].get_num(), "t"));
  if (d != 0 || parts.empty())
    parts.push_back(spec[d].label);
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i)
    s += (i ? "∘" : "") + parts[i];
  return s;
}

std::optional<AffineIso> parse_element_label(const GroupSpec& spec,
                                             std::string_view label) {
  std::vector<std::string> parts;
  std::string s(label);
  const std::string sep = "∘";
  for (size_t pos = 0;;) {
    size_t next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next == std::string::npos ? next : next - pos));
    if (next == std::string::npos)
      break;
    pos = next + sep.size();
  }
  size_t d = spec.find_label(parts.back());
  if (d != GroupSpec::npos)
    parts.pop_back();
  else
    d = 0;
  static const std::regex term(R"((-?)(\d*)([ts]))");
  IVec2 a{Int(0), Int(0)};
  for (auto& p : parts) {
    std::smatch m;
    if (!std::regex_match(p, m, term))
      return std::nullopt;
    Int n = m[2].length() ? Int(m[2].str()) : Int(1);
    if (m[1].length())
      n = -n;
    a[m[3].str() == "t" ? 0 : 1] += n;
  }
  const AffineIso& g = spec[d].pullback;
  return AffineIso{g.trans + to_vec(a), g.lin};
}

} // namespace kcrystal
