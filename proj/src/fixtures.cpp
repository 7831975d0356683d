#include "kcrystal/fixtures.hpp"

#include <sstream>
#include "kcrystal/data.hpp"

namespace kcrystal {

const char* kind_name(DisplaySet::Kind k) {
  switch (k) {
    case DisplaySet::Kind::All: return "all";
    case DisplaySet::Kind::FundamentalDomain: return "fd";
    case DisplaySet::Kind::Surface: return "surface";
    case DisplaySet::Kind::Points: return "pts";
    case DisplaySet::Kind::Lines: return "lines";
    case DisplaySet::Kind::Segments: return "segs";
    case DisplaySet::Kind::Circle: return "circle";
  }
  return "?";
}

namespace {

const std::string kPlusMinus = "±";

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return "";
  size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (;;) {
    size_t p = s.find(sep, start);
    out.push_back(trim(s.substr(start, p == std::string_view::npos ? p : p - start)));
    if (p == std::string_view::npos)
      return out;
    start = p + 1;
  }
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;)
    out.push_back(w);
  return out;
}

// every sign choice for each "±"
std::vector<std::string> expand_pm(const std::string& s) {
  size_t p = s.find(kPlusMinus);
  if (p == std::string::npos)
    return {s};
  std::vector<std::string> out;
  for (const char* sign : {"+", "-"}) {
    std::string t = s.substr(0, p) + sign + s.substr(p + kPlusMinus.size());
    for (auto& u : expand_pm(t))
      out.push_back(u);
  }
  return out;
}

Rational parse_signed(std::string s) {
  if (!s.empty() && s[0] == '+')
    s.erase(0, 1);
  return parse_rational(s);
}

// c or a*x + c with x the (single) parameter
std::pair<Rational, Rational> parse_affine(const std::string& s) {
  size_t v = s.find_first_of("xy");
  if (v == std::string::npos)
    return {Rational(0), parse_signed(s)};
  std::string pre = s.substr(0, v), post = s.substr(v + 1);
  Rational coef = 1;
  if (pre == "-")
    coef = -1;
  else if (!pre.empty() && pre != "+")
    coef = parse_signed(pre);
  Rational c = 0;
  if (!post.empty() && post[0] == '/') {
    size_t e = post.find_first_of("+-", 1);
    coef /= parse_rational(post.substr(1, e == std::string::npos ? e : e - 1));
    post = e == std::string::npos ? "" : post.substr(e);
  }
  if (!post.empty())
    c = parse_signed(post);
  return {coef, c};
}

// "(a,b)" -> the two coordinate strings
std::pair<std::string, std::string> parse_pair(const std::string& s) {
  if (s.size() < 5 || s.front() != '(' || s.back() != ')')
    throw ParseError("bad coordinate pair: " + s);
  auto parts = split(std::string_view(s).substr(1, s.size() - 2), ',');
  if (parts.size() != 2)
    throw ParseError("bad coordinate pair: " + s);
  return {parts[0], parts[1]};
}

DisplayLine parse_line(const std::string& s) {
  try {
    auto [xs, ys] = parse_pair(s);
    auto [a0, c0] = parse_affine(xs);
    auto [a1, c1] = parse_affine(ys);
    if (a0 == 0 && a1 == 0)
      throw ParseError("line without a parameter: " + s);
    return DisplayLine{{c0, c1}, {a0, a1}};
  } catch (const std::invalid_argument&) {
    throw ParseError("bad line: " + s);
  }
}

DisplaySet parse_display(const std::string& text, const DisplaySet* prev) {
  auto w = words(text);
  if (w.empty())
    throw ParseError("empty table entry");
  DisplaySet s;
  const std::string& head = w[0];
  if (head == "same") {
    if (!prev)
      throw ParseError("'same' in the first row");
    s = *prev;
    s.same = true;
    return s;
  }
  if (head == "all" || head == "fd" || head == "circle") {
    if (w.size() != 1)
      throw ParseError("unexpected text after " + head);
    s.kind = head == "all" ? DisplaySet::Kind::All
           : head == "fd"  ? DisplaySet::Kind::FundamentalDomain
                           : DisplaySet::Kind::Circle;
    return s;
  }
  if (head == "surface") {
    s.kind = DisplaySet::Kind::Surface;
    s.surface = trim(text.substr(text.find("surface") + 7));
    if (s.surface.empty())
      throw ParseError("surface without a name");
    return s;
  }
  if (head == "pts")
    s.kind = DisplaySet::Kind::Points;
  else if (head == "lines")
    s.kind = DisplaySet::Kind::Lines;
  else if (head == "segs")
    s.kind = DisplaySet::Kind::Segments;
  else
    throw ParseError("unknown table entry: " + text);
  s.items.assign(w.begin() + 1, w.end());
  if (s.items.empty())
    throw ParseError(head + " without items");
  // validate eagerly
  if (s.kind == DisplaySet::Kind::Points)
    display_points(s);
  else
    display_lines(s);
  return s;
}

std::string format_display(const DisplaySet& s) {
  if (s.same)
    return "same";
  switch (s.kind) {
    case DisplaySet::Kind::Surface: return "surface " + s.surface;
    case DisplaySet::Kind::Points:
    case DisplaySet::Kind::Lines:
    case DisplaySet::Kind::Segments: {
      std::string out = kind_name(s.kind);
      for (auto& i : s.items)
        out += " " + i;
      return out;
    }
    default: return kind_name(s.kind);
  }
}

} // namespace

std::vector<Vec2> display_points(const DisplaySet& s) {
  if (s.kind != DisplaySet::Kind::Points)
    return {};
  std::vector<Vec2> out;
  for (auto& item : s.items)
    for (auto& e : expand_pm(item)) {
      auto [xs, ys] = parse_pair(e);
      try {
        out.push_back({parse_signed(xs), parse_signed(ys)});
      } catch (const std::invalid_argument&) {
        throw ParseError("bad point: " + item);
      }
    }
  return out;
}

std::vector<DisplayLine> display_lines(const DisplaySet& s) {
  std::vector<DisplayLine> out;
  if (s.kind == DisplaySet::Kind::Lines) {
    for (auto& item : s.items)
      for (auto& e : expand_pm(item))
        out.push_back(parse_line(e));
  } else if (s.kind == DisplaySet::Kind::Segments) {
    for (auto& item : s.items) {
      size_t b = item.find('[');
      if (b == std::string::npos || item.back() != ']')
        throw ParseError("bad segment: " + item);
      auto range = split(std::string_view(item).substr(b + 1, item.size() - b - 2), ',');
      if (range.size() != 2)
        throw ParseError("bad segment range: " + item);
      for (auto& e : expand_pm(item.substr(0, b))) {
        DisplayLine l = parse_line(e);
        try {
          l.lo = parse_signed(range[0]);
          l.hi = parse_signed(range[1]);
        } catch (const std::invalid_argument&) {
          throw ParseError("bad segment range: " + item);
        }
        out.push_back(l);
      }
    }
  }
  return out;
}

Vec2 torus_point(const Vec2& p) {
  return frac(Vec2{p[0] / 2, p[1] / 2});
}

namespace {

IVec2 primitive_direction(const Vec2& v) {
  // clear denominators, then divide by the gcd
  Int l = lcm(v[0].get_den(), v[1].get_den());
  IVec2 d{Int(v[0] * l), Int(v[1] * l)};
  Int g = gcd(d[0], d[1]);
  return {d[0] / g, d[1] / g};
}

} // namespace

Circle torus_circle(const DisplayLine& l) {
  return make_circle(torus_point(l.offset), primitive_direction(l.coef));
}

bool segment_is_circle(const DisplayLine& l) {
  Vec2 disp{(l.hi - l.lo) * l.coef[0] / 2, (l.hi - l.lo) * l.coef[1] / 2};
  return is_integral(disp) && (disp[0] != 0 || disp[1] != 0);
}

std::vector<GroupFixture> parse_fixtures(std::string_view text) {
  std::vector<GroupFixture> out;
  GroupFixture* cur = nullptr;
  bool have_headline = false;
  std::istringstream in{std::string(text)};
  int lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#')
      continue;
    auto where = [&] { return " (fixtures line " + std::to_string(lineno) + ")"; };
    try {
      auto w = words(line);
      const std::string& key = w[0];
      if (key == "group") {
        if (cur)
          throw ParseError("nested group");
        if (w.size() != 3)
          throw ParseError("expected: group <name> <torus|plane>");
        out.emplace_back();
        cur = &out.back();
        cur->group = w[1];
        cur->mode = parse_mode(w[2]);
        have_headline = false;
        continue;
      }
      if (!cur)
        throw ParseError("'" + key + "' outside a group");
      std::string rest = trim(std::string_view(line).substr(key.size()));
      if (key == "end") {
        if (!have_headline || cur->rows.empty())
          throw ParseError("group " + cur->group + " needs a headline and rows");
        cur = nullptr;
      } else if (key == "headline") {
        auto f = split(rest, '|');
        if (f.size() != 2)
          throw ParseError("expected: headline <K0> | <K1>");
        cur->K0 = parse_abgroup(f[0]);
        cur->K1 = parse_abgroup(f[1]);
        have_headline = true;
      } else if (key == "row") {
        auto f = split(rest, '|');
        if (f.size() != 5)
          throw ParseError("expected: row <label> | <X> | <Q> | <even> | <odd>");
        FixtureRow r;
        r.label = f[0];
        const FixtureRow* prev = cur->rows.empty() ? nullptr : &cur->rows.back();
        r.x = parse_display(f[1], prev ? &prev->x : nullptr);
        r.q = parse_display(f[2], prev ? &prev->q : nullptr);
        r.even = parse_abgroup(f[3]);
        r.odd = parse_abgroup(f[4]);
        cur->rows.push_back(std::move(r));
      } else if (key == "expect") {
        auto f = split(rest, '|');
        auto id = words(f[0]);
        if (f.size() != 3 || id.size() != 3)
          throw ParseError("expected: expect <level> <label> <field> | <location> | <reason>");
        if (id[0] != "headline" && id[0] != "row" && id[0] != "display")
          throw ParseError("unknown level " + id[0]);
        cur->expects.push_back(Expectation{id[0], id[1], id[2], f[1], f[2]});
      } else if (key == "claim") {
        if (rest != "fc-equal")
          throw ParseError("unknown claim " + rest);
        cur->claim_fc_equal = true;
      } else {
        throw ParseError("unknown keyword " + key);
      }
    } catch (const ParseError& e) {
      throw ParseError(e.what() + where());
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string(e.what()) + where());
    }
  }
  if (cur)
    throw ParseError("group " + cur->group + " is not closed");
  return out;
}

std::string format_fixtures(const std::vector<GroupFixture>& fx) {
  std::ostringstream os;
  for (size_t i = 0; i < fx.size(); ++i) {
    const GroupFixture& g = fx[i];
    if (i)
      os << '\n';
    os << "group " << g.group << ' ' << mode_name(g.mode) << '\n';
    os << "  headline " << to_string(g.K0) << " | " << to_string(g.K1) << '\n';
    for (auto& r : g.rows)
      os << "  row " << r.label << " | " << format_display(r.x) << " | "
         << format_display(r.q) << " | " << to_string(r.even) << " | " << to_string(r.odd)
         << '\n';
    if (g.claim_fc_equal)
      os << "  claim fc-equal\n";
    for (auto& e : g.expects)
      os << "  expect " << e.level << ' ' << e.label << ' ' << e.field << " | "
         << e.location << " | " << e.reason << '\n';
    os << "end\n";
  }
  return os.str();
}

const std::vector<GroupFixture>& shipped_fixtures() {
  static const std::vector<GroupFixture> fx = parse_fixtures(embedded_fixtures_text());
  return fx;
}

const GroupFixture& fixture(std::string_view group) {
  for (auto& g : shipped_fixtures())
    if (g.group == group)
      return g;
  throw NotFound("no fixture for group " + std::string(group));
}

} // namespace kcrystal
