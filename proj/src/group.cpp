#include "kcrystal/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include "kcrystal/data.hpp"

namespace kcrystal {

AffineIso compose(const AffineIso& g, const AffineIso& h) {
  return AffineIso{g.trans + g.lin * h.trans, g.lin * h.lin};
}

AffineIso inverse(const AffineIso& g) {
  Mat2 inv = kcrystal::inverse(g.lin);
  return AffineIso{-(inv * g.trans), inv};
}

AffineIso power(const AffineIso& g, int k) {
  AffineIso r;
  AffineIso base = k < 0 ? inverse(g) : g;
  for (int i = 0; i < (k < 0 ? -k : k); ++i)
    r = compose(r, base);
  return r;
}

AffineIso conjugate(const AffineIso& h, const AffineIso& g) {
  return compose(compose(h, g), inverse(h));
}

AffineIso conjugate_by_translation(const AffineIso& g, const IVec2& m) {
  // t(-m) g t(m) = (trans + lin m - m, lin)
  Vec2 mv = to_vec(m);
  return AffineIso{g.trans + g.lin * mv - mv, g.lin};
}

bool equal_mod_lattice(const AffineIso& g, const AffineIso& h) {
  return g.lin == h.lin && is_integral(g.trans - h.trans);
}

AffineIso reduce_mod_lattice(const AffineIso& g) {
  return AffineIso{frac(g.trans), g.lin};
}

std::string to_string(const AffineIso& g) {
  return "(" + to_string(g.trans) + ", " + to_string(g.lin) + ")";
}

IsoOrder order(const AffineIso& g) {
  IsoOrder r;
  int k = linear_order(g.lin);
  if (k == 0)
    return r;
  AffineIso p = power(g, k);
  // (g^k)^j = (j * p.trans, I): torus order is k once p.trans is integral
  if (is_integral(p.trans)) {
    r.torus = k;
  } else {
    Int den = lcm(p.trans[0].get_den(), p.trans[1].get_den());
    r.torus = int(k * den.get_si());
  }
  if (p.trans[0] == 0 && p.trans[1] == 0)
    r.plane = k;
  return r;
}

const char* kind_name(ElementKind k) {
  switch (k) {
    case ElementKind::Identity: return "identity";
    case ElementKind::Rotation: return "rotation";
    case ElementKind::Reflection: return "reflection";
    case ElementKind::Glide: return "glide";
  }
  return "?";
}

ElementKind classify(const AffineIso& g) {
  if (g.lin.is_identity())
    return ElementKind::Identity;
  if (g.lin.det() == 1)
    return ElementKind::Rotation;
  // (I + M)(a + u) = 0 for some integer a
  Mat2 S{g.lin.a + 1, g.lin.b, g.lin.c, g.lin.d + 1};
  Vec2 rhs = -(S * g.trans);
  if (!is_integral(rhs))
    return ElementKind::Glide;
  IntegerSolution sol = solve_integer(S.to_intmat(), {rhs[0].get_num(), rhs[1].get_num()});
  return sol.solvable ? ElementKind::Reflection : ElementKind::Glide;
}

size_t GroupSpec::find(const Mat2& lin) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i].pullback.lin == lin)
      return i;
  return npos;
}

size_t GroupSpec::find_label(std::string_view label) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i].label == label)
      return i;
  return npos;
}

bool GroupSpec::symmorphic() const {
  return std::all_of(elements.begin(), elements.end(), [](const PointGroupElement& e) {
    return e.pullback.trans[0] == 0 && e.pullback.trans[1] == 0;
  });
}

bool GroupSpec::operator==(const GroupSpec& o) const {
  if (name != o.name || lattice_hint != o.lattice_hint ||
      declared_order != o.declared_order || elements.size() != o.elements.size())
    return false;
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i].label != o.elements[i].label ||
        elements[i].pullback != o.elements[i].pullback)
      return false;
  return true;
}

ValidationReport validate_cocycle(const GroupSpec& spec) {
  ValidationReport rep;
  auto& els = spec.elements;
  auto problem = [&](std::string s) { rep.problems.push_back(spec.name + ": " + s); };
  if (els.size() != spec.declared_order)
    problem("declared |D| = " + std::to_string(spec.declared_order) + " but " +
            std::to_string(els.size()) + " elements listed");
  if (els.empty()) {
    problem("no elements");
    return rep;
  }
  std::set<std::string> labels;
  for (auto& e : els) {
    if (!labels.insert(e.label).second)
      problem("duplicate label " + e.label);
    Int det = e.pullback.lin.det();
    if (det != 1 && det != -1) {
      problem(e.label + ": det " + det.get_str() + " is not +-1");
      continue;
    }
    int k = linear_order(e.pullback.lin);
    if (k != 1 && k != 2 && k != 3 && k != 4 && k != 6)
      problem(e.label + ": linear part " + to_string(e.pullback.lin) +
              " violates the crystallographic restriction");
  }
  const AffineIso& first = els[0].pullback;
  if (!first.lin.is_identity() || !is_integral(first.trans))
    problem("first element " + els[0].label + " is not the identity");
  for (size_t i = 0; i < els.size(); ++i)
    for (size_t j = i + 1; j < els.size(); ++j)
      if (els[i].pullback.lin == els[j].pullback.lin)
        problem(els[i].label + " and " + els[j].label + " share a linear part");
  if (!rep.ok())
    return rep;
  for (auto& d1 : els)
    for (auto& d2 : els) {
      AffineIso p = compose(d1.pullback, d2.pullback);
      size_t k = spec.find(p.lin);
      if (k == GroupSpec::npos) {
        problem("closure: " + d1.label + "*" + d2.label + " has linear part " +
                to_string(p.lin) + " outside D");
        continue;
      }
      if (!is_integral(p.trans - els[k].pullback.trans))
        problem("cocycle: s(" + d1.label + "*" + d2.label + ") = " +
                to_string(frac(p.trans)) + " but " + els[k].label + " has " +
                to_string(frac(els[k].pullback.trans)));
    }
  return rep;
}

GroupSpec make_spec(std::string name, std::string hint, size_t declared_order,
                    std::vector<PointGroupElement> elements) {
  GroupSpec spec{std::move(name), std::move(hint), declared_order, std::move(elements)};
  for (auto& e : spec.elements) {
    e.pullback = reduce_mod_lattice(e.pullback);
    Int det = e.pullback.lin.det();
    e.lin_order = (det == 1 || det == -1) ? linear_order(e.pullback.lin) : 0;
    e.kind = classify(e.pullback);
  }
  return spec;
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t)
    out.push_back(t);
  return out;
}

} // namespace

std::vector<GroupSpec> parse_catalog(std::string_view text) {
  std::vector<GroupSpec> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool open = false, transpose = false;
  std::string name, hint;
  size_t declared = 0;
  std::vector<PointGroupElement> els;
  auto err = [&](const std::string& msg) {
    throw ParseError("catalog line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    auto tok = tokens(line);
    if (tok.empty())
      continue;
    if (tok[0] == "group") {
      if (open)
        err("missing 'end'");
      if (tok.size() != 3)
        err("expected: group <name> <order>");
      open = true;
      transpose = false;
      name = tok[1];
      hint.clear();
      els.clear();
      try {
        declared = std::stoul(tok[2]);
      } catch (const std::exception&) {
        err("bad order '" + tok[2] + "'");
      }
    } else if (!open) {
      err("expected 'group'");
    } else if (tok[0] == "hint") {
      size_t p = line.find("hint") + 4;
      hint = line.substr(line.find_first_not_of(" \t", p));
      hint.erase(hint.find_last_not_of(" \t\r") + 1);
    } else if (tok[0] == "transpose") {
      transpose = true;
    } else if (tok[0] == "end") {
      out.push_back(make_spec(name, hint, declared, std::move(els)));
      els.clear();
      open = false;
    } else {
      if (tok.size() != 7)
        err("expected: <label> m11 m12 m21 m22 u1 u2");
      PointGroupElement e;
      e.label = tok[0];
      try {
        e.pullback.lin = Mat2{Int(tok[1]), Int(tok[2]), Int(tok[3]), Int(tok[4])};
      } catch (const std::invalid_argument&) {
        err("bad matrix entry");
      }
      if (transpose)
        e.pullback.lin = e.pullback.lin.transposed();
      e.pullback.trans = Vec2{parse_rational(tok[5]), parse_rational(tok[6])};
      els.push_back(std::move(e));
    }
  }
  if (open)
    err("missing 'end' at end of input");
  return out;
}

std::string format_catalog(const std::vector<GroupSpec>& specs) {
  std::ostringstream os;
  for (size_t n = 0; n < specs.size(); ++n) {
    const GroupSpec& s = specs[n];
    if (n)
      os << '\n';
    os << "group " << s.name << ' ' << s.declared_order << '\n';
    if (!s.lattice_hint.empty())
      os << "hint " << s.lattice_hint << '\n';
    for (auto& e : s.elements) {
      const Mat2& m = e.pullback.lin;
      os << "  " << e.label << ' ' << m.a << ' ' << m.b << ' ' << m.c << ' ' << m.d
         << ' ' << to_string(e.pullback.trans[0]) << ' '
         << to_string(e.pullback.trans[1]) << '\n';
    }
    os << "end\n";
  }
  return os.str();
}

const std::vector<GroupSpec>& full_catalog() {
  static const std::vector<GroupSpec> specs = [] {
    auto v = parse_catalog(embedded_catalog_text());
    for (auto& s : v) {
      ValidationReport r = validate_cocycle(s);
      if (!r.ok())
        fail("shipped catalog invalid: " + r.problems.front());
    }
    return v;
  }();
  return specs;
}

const std::vector<std::string>& group_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (auto& s : full_catalog())
      v.push_back(s.name);
    return v;
  }();
  return names;
}

const GroupSpec& catalog(std::string_view name) {
  for (auto& s : full_catalog())
    if (s.name == name)
      return s;
  throw NotFound("unknown group '" + std::string(name) + "'");
}

GroupSpec change_basis(const GroupSpec& spec, const Mat2& P) {
  Mat2 Pi = inverse(P);
  GroupSpec out = spec;
  for (auto& e : out.elements) {
    e.pullback = AffineIso{frac(Pi * e.pullback.trans), Pi * e.pullback.lin * P};
    e.kind = classify(e.pullback);
  }
  return out;
}

} // namespace kcrystal
