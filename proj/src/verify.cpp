#include "kcrystal/verify.hpp"

#include <algorithm>
#include <cctype>

namespace kcrystal {

const char* level_name(ItemLevel l) {
  switch (l) {
    case ItemLevel::Headline: return "headline";
    case ItemLevel::Row: return "row";
    case ItemLevel::Display: return "display";
    case ItemLevel::Label: return "label";
  }
  return "?";
}

ItemLevel parse_level(std::string_view s) {
  for (ItemLevel l : {ItemLevel::Headline, ItemLevel::Row, ItemLevel::Display, ItemLevel::Label})
    if (s == level_name(l))
      return l;
  throw ParseError("unknown item level: " + std::string(s));
}

const char* status_name(ItemStatus s) {
  switch (s) {
    case ItemStatus::Match: return "Match";
    case ItemStatus::Discrepancy: return "Discrepancy";
    case ItemStatus::ExpectedDiscrepancy: return "ExpectedDiscrepancy";
    case ItemStatus::Note: return "Note";
  }
  return "?";
}

ItemStatus parse_status(std::string_view s) {
  for (ItemStatus x : {ItemStatus::Match, ItemStatus::Discrepancy,
                       ItemStatus::ExpectedDiscrepancy, ItemStatus::Note})
    if (s == status_name(x))
      return x;
  throw ParseError("unknown item status: " + std::string(s));
}

size_t VerificationReport::count(ItemStatus s) const {
  return size_t(std::count_if(items.begin(), items.end(),
                              [&](const VerificationItem& i) { return i.status == s; }));
}

namespace {

std::string lower(std::string s) {
  for (char& c : s)
    c = char(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// the shape a printed quotient entry describes
struct QuotientShape {
  bool surface = false;
  std::string name;  // empty: any surface
  int points = 0, intervals = 0, circles = 0;
};

QuotientShape shape_of(const DisplaySet& q) {
  QuotientShape s;
  switch (q.kind) {
    case DisplaySet::Kind::All:
    case DisplaySet::Kind::FundamentalDomain: s.surface = true; break;
    case DisplaySet::Kind::Surface:
      s.surface = true;
      s.name = q.surface;
      break;
    case DisplaySet::Kind::Points: s.points = int(display_points(q).size()); break;
    case DisplaySet::Kind::Circle: s.circles = 1; break;
    case DisplaySet::Kind::Lines: s.circles = int(display_lines(q).size()); break;
    case DisplaySet::Kind::Segments:
      for (auto& l : display_lines(q))
        ++(segment_is_circle(l) ? s.circles : s.intervals);
      break;
  }
  return s;
}

std::string describe(const QuotientShape& s) {
  if (s.surface)
    return s.name.empty() ? "fundamental domain" : s.name;
  QuotientSpace q;
  q.points = s.points;
  q.intervals = s.intervals;
  q.circles = s.circles;
  return q.description();
}

bool shape_matches(const QuotientShape& s, const QuotientSpace& q) {
  if (s.surface)
    return q.surface && (s.name.empty() || lower(s.name) == lower(q.surface->name));
  return !q.surface && q.points == s.points && q.intervals == s.intervals &&
         q.circles == s.circles;
}

std::string count_text(size_t n, const char* what) {
  return std::to_string(n) + " " + what + (n == 1 ? "" : "s");
}

// Printed X^g against the torus fixed set: every listed item is a distinct
// component and together they are the whole set.
VerificationItem check_x(const FixtureRow& row, const FixedSet& fs) {
  VerificationItem it;
  it.level = ItemLevel::Display;
  it.label = row.label;
  it.field = "x";
  bool ok = false;
  switch (row.x.kind) {
    case DisplaySet::Kind::All:
    case DisplaySet::Kind::FundamentalDomain:
      it.table = "T^2";
      ok = fs.kind == FixedSet::Kind::All;
      break;
    case DisplaySet::Kind::Points: {
      std::vector<Vec2> raw;
      for (auto& p : display_points(row.x))
        raw.push_back(torus_point(p));
      std::vector<Vec2> distinct = raw;
      std::sort(distinct.begin(), distinct.end(), vec_less);
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      std::vector<Vec2> mine = fs.points;
      std::sort(mine.begin(), mine.end(), vec_less);
      it.table = count_text(raw.size(), "listed point") + ", " +
                 count_text(distinct.size(), "distinct point");
      ok = fs.kind == FixedSet::Kind::Points && raw.size() == mine.size() && distinct == mine;
      break;
    }
    case DisplaySet::Kind::Lines: {
      std::vector<Circle> raw;
      for (auto& l : display_lines(row.x))
        raw.push_back(torus_circle(l));
      std::vector<Circle> distinct = raw;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      std::vector<Circle> mine = fs.lines;
      std::sort(mine.begin(), mine.end());
      it.table = count_text(raw.size(), "listed line") + ", " +
                 count_text(distinct.size(), "distinct circle");
      ok = fs.kind == FixedSet::Kind::Lines && raw.size() == mine.size() && distinct == mine;
      break;
    }
    default: it.table = kind_name(row.x.kind); break;
  }
  switch (fs.kind) {
    case FixedSet::Kind::All: it.computed = "T^2"; break;
    case FixedSet::Kind::Points: it.computed = count_text(fs.points.size(), "point"); break;
    case FixedSet::Kind::Lines: it.computed = count_text(fs.lines.size(), "circle"); break;
    case FixedSet::Kind::Empty: it.computed = "empty"; break;
  }
  it.status = ok ? ItemStatus::Match : ItemStatus::Discrepancy;
  return it;
}

void compare_row(const FixtureRow& row, const ClassTerm& t, Mode mode,
                 std::vector<VerificationItem>& items) {
  auto add = [&](ItemLevel lvl, const char* field, std::string table, std::string computed,
                 bool ok) {
    VerificationItem it{lvl, row.label, field, std::move(table), std::move(computed),
                        ok ? ItemStatus::Match : ItemStatus::Discrepancy, ""};
    if (t.cls.label != row.label)
      it.detail = "computed class " + t.cls.label;
    items.push_back(std::move(it));
  };
  add(ItemLevel::Row, "even", to_string(row.even), to_string(t.even), row.even == t.even);
  add(ItemLevel::Row, "odd", to_string(row.odd), to_string(t.odd), row.odd == t.odd);
  QuotientShape s = shape_of(row.q);
  add(ItemLevel::Row, "q", describe(s), t.quotient.description(),
      shape_matches(s, t.quotient));
  if (mode == Mode::Torus) {
    VerificationItem x = check_x(row, t.fixed);
    if (t.cls.label != row.label)
      x.detail = "computed class " + t.cls.label;
    items.push_back(std::move(x));
  }
}

constexpr size_t kNone = size_t(-1);

// index of the computed class a printed label names, kNone if none
struct LabelLookup {
  size_t cls = kNone;
  std::string problem;
};

LabelLookup lookup_label(const GroupSpec& spec, const KResult& r, const std::string& label) {
  LabelLookup out;
  if (r.mode == Mode::Torus) {
    for (size_t j = 0; j < r.per_class.size(); ++j)
      if (r.per_class[j].cls.label == label)
        out.cls = j;
    if (out.cls == kNone)
      out.problem = spec.find_label(label) == GroupSpec::npos
                        ? "not a point-group element"
                        : "not the first member of its class";
    return out;
  }
  auto g = parse_element_label(spec, label);
  if (!g) {
    out.problem = "label not understood";
    return out;
  }
  if (!order(*g).plane) {
    out.problem = "names " + to_string(*g) + ", which has infinite order";
    return out;
  }
  AffineIso rep = canonical_rep(spec, *g);
  for (size_t j = 0; j < r.per_class.size(); ++j)
    if (r.per_class[j].cls.rep == rep)
      out.cls = j;
  if (out.cls == kNone)
    out.problem = "no computed class for " + to_string(*g);
  return out;
}

void apply_expectations(const GroupFixture& fx, std::vector<VerificationItem>& items) {
  for (const Expectation& e : fx.expects) {
    ItemLevel lvl = parse_level(e.level);
    bool fired = false;
    for (auto& it : items)
      if (it.level == lvl && it.label == e.label && it.field == e.field &&
          it.status == ItemStatus::Discrepancy) {
        it.status = ItemStatus::ExpectedDiscrepancy;
        it.detail += (it.detail.empty() ? "" : "; ") + e.location + ": " + e.reason;
        fired = true;
      }
    if (!fired)
      items.push_back(VerificationItem{lvl, e.label, "expect", e.field, "no discrepancy",
                                       ItemStatus::Discrepancy,
                                       "annotation did not fire (" + e.location + ")"});
  }
}

} // namespace

VerificationReport verify_group(const GroupSpec& spec, const GroupFixture& fx, int N) {
  VerificationReport rep;
  rep.group = fx.group;
  rep.fixture = fx;
  rep.computed = k_homology(spec, fx.mode, N);
  const KResult& r = rep.computed;
  auto& items = rep.items;

  items.push_back({ItemLevel::Headline, "-", "K0", to_string(fx.K0), to_string(r.K0),
                   fx.K0 == r.K0 ? ItemStatus::Match : ItemStatus::Discrepancy, ""});
  items.push_back({ItemLevel::Headline, "-", "K1", to_string(fx.K1), to_string(r.K1),
                   fx.K1 == r.K1 ? ItemStatus::Match : ItemStatus::Discrepancy, ""});

  // pair rows with computed classes
  const size_t nrows = fx.rows.size(), ncls = r.per_class.size();
  std::vector<LabelLookup> named(nrows);
  for (size_t i = 0; i < nrows; ++i)
    named[i] = lookup_label(spec, r, fx.rows[i].label);
  std::vector<size_t> match(nrows, kNone);
  std::vector<bool> used(ncls, false);
  auto sums_equal = [&](size_t i, size_t j) {
    return fx.rows[i].even == r.per_class[j].even && fx.rows[i].odd == r.per_class[j].odd;
  };
  auto q_fits = [&](size_t i, size_t j) {
    return shape_matches(shape_of(fx.rows[i].q), r.per_class[j].quotient);
  };
  auto take = [&](size_t i, size_t j) {
    match[i] = j;
    used[j] = true;
  };
  // torus rows are keyed by label; plane rows by the class their label names,
  // then by sums and quotient shape
  for (size_t i = 0; i < nrows; ++i)
    if (size_t j = named[i].cls; j != kNone && !used[j] && (fx.mode == Mode::Torus || sums_equal(i, j)))
      take(i, j);
  if (fx.mode == Mode::Plane) {
    for (int pass = 0; pass < 3; ++pass)
      for (size_t i = 0; i < nrows; ++i) {
        if (match[i] != kNone)
          continue;
        if (pass == 2) {
          if (size_t j = named[i].cls; j != kNone && !used[j])
            take(i, j);
          continue;
        }
        for (size_t j = 0; j < ncls; ++j)
          if (!used[j] && sums_equal(i, j) && (pass == 1 || q_fits(i, j))) {
            take(i, j);
            break;
          }
      }
  }

  std::vector<size_t> first_row_of(ncls, kNone);
  for (size_t i = 0; i < nrows; ++i) {
    const FixtureRow& row = fx.rows[i];
    if (match[i] == kNone)
      items.push_back({ItemLevel::Row, row.label, "unmatched",
                       to_string(row.even) + " | " + to_string(row.odd), "-",
                       ItemStatus::Discrepancy, "no computed class fits this row"});
    else
      compare_row(row, r.per_class[match[i]], fx.mode, items);

    VerificationItem audit{ItemLevel::Label, row.label, "class", row.label, "-",
                           ItemStatus::Match, ""};
    const LabelLookup& nl = named[i];
    if (nl.cls == kNone) {
      audit.status = ItemStatus::Note;
      audit.detail = nl.problem;
    } else {
      audit.computed = r.per_class[nl.cls].cls.label;
      if (first_row_of[nl.cls] != kNone) {
        audit.status = ItemStatus::Note;
        audit.detail = "same class as row " + fx.rows[first_row_of[nl.cls]].label;
      } else if (match[i] != kNone && match[i] != nl.cls) {
        audit.status = ItemStatus::Note;
        audit.detail = "row data fit class " + r.per_class[match[i]].cls.label;
      }
      if (first_row_of[nl.cls] == kNone)
        first_row_of[nl.cls] = i;
    }
    items.push_back(std::move(audit));
  }
  for (size_t j = 0; j < ncls; ++j)
    if (!used[j]) {
      const ClassTerm& t = r.per_class[j];
      items.push_back({ItemLevel::Row, t.cls.label, "extra", "-",
                       to_string(t.even) + " | " + to_string(t.odd), ItemStatus::Discrepancy,
                       "computed class missing from the table"});
    }

  if (fx.claim_fc_equal) {
    size_t g = enumerate_fc(spec, Mode::Plane).size();
    size_t d = enumerate_fc(spec, Mode::Torus).size();
    items.push_back({ItemLevel::Label, "-", "fc-equal", "FC(G) = FC(D)",
                     std::to_string(g) + " classes in G, " + std::to_string(d) + " in D",
                     g == d ? ItemStatus::Match : ItemStatus::Note, ""});
  }

  apply_expectations(fx, items);
  return rep;
}

std::vector<VerificationReport> verify_against_tables(const std::vector<GroupFixture>& fx,
                                                     std::string_view group) {
  std::vector<VerificationReport> out;
  for (const GroupFixture& f : fx)
    if (group.empty() || f.group == group)
      out.push_back(verify_group(catalog(f.group), f));
  if (!group.empty() && out.empty())
    throw NotFound("no fixture for group " + std::string(group));
  return out;
}

std::vector<VerificationReport> verify_against_tables(std::string_view group) {
  if (!group.empty())
    catalog(group);  // NotFound for unknown names
  return verify_against_tables(shipped_fixtures(), group);
}

} // namespace kcrystal
