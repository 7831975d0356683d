#include "kcrystal/document.hpp"

namespace kcrystal {

using Json = nlohmann::ordered_json;

namespace {

Json enc(const Rational& q) { return to_string(q); }
Json enc(const Int& n) {
  if (!n.fits_slong_p())
    return to_string(n);
  return n.get_si();
}
Json enc(const Vec2& v) { return Json::array({enc(v[0]), enc(v[1])}); }
Json enc(const IVec2& v) { return Json::array({enc(v[0]), enc(v[1])}); }
Json enc(const Mat2& m) { return Json::array({enc(m.a), enc(m.b), enc(m.c), enc(m.d)}); }
Json enc(const FinAbGroup& g) { return to_string(g); }
Json enc(const AffineIso& g) { return Json{{"trans", enc(g.trans)}, {"lin", enc(g.lin)}}; }
Json enc(const Circle& c) { return Json{{"base", enc(c.base)}, {"dir", enc(c.dir)}}; }

Json enc(const PointGroupElement& e);
Json enc(const ConjClass& c);
Json enc(const ClassTerm& t);
Json enc(const FixtureRow& r);
Json enc(const Expectation& e);
Json enc(const VerificationItem& i);
Json enc(const VerificationReport& r);

template <class T>
Json enc_list(const std::vector<T>& xs) {
  Json a = Json::array();
  for (const T& x : xs)
    a.push_back(enc(x));
  return a;
}

Rational dec_rational(const Json& j) {
  return parse_rational(j.get<std::string>());
}
Int dec_int(const Json& j) {
  if (j.is_string())
    return Int(j.get<std::string>());
  return Int(j.get<long>());
}
Vec2 dec_vec(const Json& j) { return {dec_rational(j.at(0)), dec_rational(j.at(1))}; }
IVec2 dec_ivec(const Json& j) { return {dec_int(j.at(0)), dec_int(j.at(1))}; }
Mat2 dec_mat(const Json& j) {
  return Mat2{dec_int(j.at(0)), dec_int(j.at(1)), dec_int(j.at(2)), dec_int(j.at(3))};
}
FinAbGroup dec_group(const Json& j) { return parse_abgroup(j.get<std::string>()); }
AffineIso dec_iso(const Json& j) { return AffineIso{dec_vec(j.at("trans")), dec_mat(j.at("lin"))}; }
Circle dec_circle(const Json& j) { return Circle{dec_vec(j.at("base")), dec_ivec(j.at("dir"))}; }

template <class T, class F>
std::vector<T> dec_list(const Json& j, F f) {
  std::vector<T> out;
  for (const Json& x : j)
    out.push_back(f(x));
  return out;
}

ElementKind parse_element_kind(const std::string& s) {
  for (ElementKind k : {ElementKind::Identity, ElementKind::Rotation, ElementKind::Reflection,
                        ElementKind::Glide})
    if (s == kind_name(k))
      return k;
  throw ParseError("unknown element kind: " + s);
}

// GroupSpec

Json enc(const PointGroupElement& e) {
  return Json{{"label", e.label},
              {"pullback", enc(e.pullback)},
              {"kind", kind_name(e.kind)},
              {"lin_order", e.lin_order}};
}

Json enc(const GroupSpec& s) {
  return Json{{"name", s.name},
              {"lattice_hint", s.lattice_hint},
              {"declared_order", s.declared_order},
              {"elements", enc_list(s.elements)}};
}

GroupSpec dec_spec(const Json& j) {
  GroupSpec s;
  s.name = j.at("name").get<std::string>();
  s.lattice_hint = j.at("lattice_hint").get<std::string>();
  s.declared_order = j.at("declared_order").get<size_t>();
  for (const Json& e : j.at("elements"))
    s.elements.push_back(PointGroupElement{e.at("label").get<std::string>(),
                                           dec_iso(e.at("pullback")),
                                           parse_element_kind(e.at("kind").get<std::string>()),
                                           e.at("lin_order").get<int>()});
  return s;
}

// classes and pipeline stages

Json enc(const ConjClass& c) {
  return Json{{"label", c.label},
              {"mode", mode_name(c.mode)},
              {"rep", enc(c.rep)},
              {"order", c.order},
              {"kind", kind_name(c.kind)},
              {"center", enc(c.center)},
              {"axis", enc(c.axis)},
              {"element", c.element},
              {"members", c.members}};
}

ConjClass dec_class(const Json& j) {
  ConjClass c;
  c.label = j.at("label").get<std::string>();
  c.mode = parse_mode(j.at("mode").get<std::string>());
  c.rep = dec_iso(j.at("rep"));
  c.order = j.at("order").get<int>();
  c.kind = parse_class_kind(j.at("kind").get<std::string>());
  c.center = dec_vec(j.at("center"));
  c.axis = dec_circle(j.at("axis"));
  c.element = j.at("element").get<size_t>();
  c.members = j.at("members").get<std::vector<size_t>>();
  return c;
}

Json enc(const FixedSet& f) {
  return Json{{"space", mode_name(f.space)},
              {"kind", kind_name(f.kind)},
              {"points", enc_list(f.points)},
              {"lines", enc_list(f.lines)}};
}

FixedSet dec_fixed(const Json& j) {
  FixedSet f;
  f.space = parse_mode(j.at("space").get<std::string>());
  f.kind = parse_fixed_kind(j.at("kind").get<std::string>());
  f.points = dec_list<Vec2>(j.at("points"), dec_vec);
  f.lines = dec_list<Circle>(j.at("lines"), dec_circle);
  return f;
}

Json enc(const Centralizer& c) {
  return Json{{"trans_rank", c.trans_rank},
              {"trans_basis", enc_list(c.trans_basis)},
              {"finite_parts", enc_list(c.finite_parts)}};
}

Centralizer dec_centralizer(const Json& j) {
  Centralizer c;
  c.trans_rank = j.at("trans_rank").get<int>();
  c.trans_basis = dec_list<IVec2>(j.at("trans_basis"), dec_ivec);
  c.finite_parts = dec_list<AffineIso>(j.at("finite_parts"), dec_iso);
  return c;
}

Json enc(const Surface& s) {
  return Json{{"name", s.name},
              {"euler", s.euler},
              {"boundary_components", s.boundary_components},
              {"orientable", s.orientable},
              {"cells", s.cells},
              {"homology", enc_list(s.homology)}};
}

Json enc(const QuotientSpace& q) {
  Json j{{"description", q.description()},
         {"points", q.points},
         {"intervals", q.intervals},
         {"circles", q.circles},
         {"surface", nullptr},
         {"homology", enc_list(q.homology)}};
  if (q.surface)
    j["surface"] = enc(*q.surface);
  return j;
}

QuotientSpace dec_quotient(const Json& j) {
  QuotientSpace q;
  q.points = j.at("points").get<int>();
  q.intervals = j.at("intervals").get<int>();
  q.circles = j.at("circles").get<int>();
  q.homology = dec_list<FinAbGroup>(j.at("homology"), dec_group);
  const Json& s = j.at("surface");
  if (!s.is_null()) {
    Surface x;
    x.name = s.at("name").get<std::string>();
    x.euler = s.at("euler").get<int>();
    x.boundary_components = s.at("boundary_components").get<int>();
    x.orientable = s.at("orientable").get<bool>();
    x.cells = s.at("cells").get<std::array<size_t, 3>>();
    x.homology = dec_list<FinAbGroup>(s.at("homology"), dec_group);
    q.surface = std::move(x);
  }
  return q;
}

Json enc(const ClassTerm& t) {
  return Json{{"class", enc(t.cls)},
              {"fixed", enc(t.fixed)},
              {"centralizer", enc(t.centralizer)},
              {"quotient", enc(t.quotient)},
              {"even", enc(t.even)},
              {"odd", enc(t.odd)}};
}

Json enc(const KResult& r) {
  return Json{{"group", r.group},
              {"mode", mode_name(r.mode)},
              {"K0", enc(r.K0)},
              {"K1", enc(r.K1)},
              {"per_class", enc_list(r.per_class)}};
}

KResult dec_kresult(const Json& j) {
  KResult r;
  r.group = j.at("group").get<std::string>();
  r.mode = parse_mode(j.at("mode").get<std::string>());
  r.K0 = dec_group(j.at("K0"));
  r.K1 = dec_group(j.at("K1"));
  for (const Json& t : j.at("per_class"))
    r.per_class.push_back(ClassTerm{dec_class(t.at("class")), dec_fixed(t.at("fixed")),
                                    dec_centralizer(t.at("centralizer")),
                                    dec_quotient(t.at("quotient")), dec_group(t.at("even")),
                                    dec_group(t.at("odd"))});
  return r;
}

// fixtures and reports

Json enc(const DisplaySet& s) {
  return Json{{"kind", kind_name(s.kind)},
              {"same", s.same},
              {"surface", s.surface},
              {"items", s.items}};
}

DisplaySet dec_display(const Json& j) {
  DisplaySet s;
  std::string k = j.at("kind").get<std::string>();
  bool found = false;
  for (auto kind : {DisplaySet::Kind::All, DisplaySet::Kind::FundamentalDomain,
                    DisplaySet::Kind::Surface, DisplaySet::Kind::Points,
                    DisplaySet::Kind::Lines, DisplaySet::Kind::Segments,
                    DisplaySet::Kind::Circle})
    if (k == kind_name(kind)) {
      s.kind = kind;
      found = true;
    }
  if (!found)
    throw ParseError("unknown table entry kind: " + k);
  s.same = j.at("same").get<bool>();
  s.surface = j.at("surface").get<std::string>();
  s.items = j.at("items").get<std::vector<std::string>>();
  return s;
}

Json enc(const FixtureRow& r) {
  return Json{{"label", r.label}, {"x", enc(r.x)}, {"q", enc(r.q)},
              {"even", enc(r.even)}, {"odd", enc(r.odd)}};
}

Json enc(const Expectation& e) {
  return Json{{"level", e.level}, {"label", e.label}, {"field", e.field},
              {"location", e.location}, {"reason", e.reason}};
}

Json enc(const GroupFixture& f) {
  return Json{{"group", f.group},
              {"mode", mode_name(f.mode)},
              {"K0", enc(f.K0)},
              {"K1", enc(f.K1)},
              {"rows", enc_list(f.rows)},
              {"expects", enc_list(f.expects)},
              {"claim_fc_equal", f.claim_fc_equal}};
}

GroupFixture dec_fixture(const Json& j) {
  GroupFixture f;
  f.group = j.at("group").get<std::string>();
  f.mode = parse_mode(j.at("mode").get<std::string>());
  f.K0 = dec_group(j.at("K0"));
  f.K1 = dec_group(j.at("K1"));
  for (const Json& r : j.at("rows"))
    f.rows.push_back(FixtureRow{r.at("label").get<std::string>(), dec_display(r.at("x")),
                                dec_display(r.at("q")), dec_group(r.at("even")),
                                dec_group(r.at("odd"))});
  for (const Json& e : j.at("expects"))
    f.expects.push_back(Expectation{
        e.at("level").get<std::string>(), e.at("label").get<std::string>(),
        e.at("field").get<std::string>(), e.at("location").get<std::string>(),
        e.at("reason").get<std::string>()});
  f.claim_fc_equal = j.at("claim_fc_equal").get<bool>();
  return f;
}

Json enc(const VerificationItem& i) {
  return Json{{"level", level_name(i.level)}, {"label", i.label},
              {"field", i.field},             {"table", i.table},
              {"computed", i.computed},       {"status", status_name(i.status)},
              {"detail", i.detail}};
}

VerificationItem dec_item(const Json& j) {
  return VerificationItem{parse_level(j.at("level").get<std::string>()),
                          j.at("label").get<std::string>(),
                          j.at("field").get<std::string>(),
                          j.at("table").get<std::string>(),
                          j.at("computed").get<std::string>(),
                          parse_status(j.at("status").get<std::string>()),
                          j.at("detail").get<std::string>()};
}

Json enc(const VerificationReport& r) {
  return Json{{"group", r.group},
              {"ok", r.ok()},
              {"computed", enc(r.computed)},
              {"fixture", enc(r.fixture)},
              {"items", enc_list(r.items)}};
}

VerificationReport dec_report(const Json& j) {
  VerificationReport r;
  r.group = j.at("group").get<std::string>();
  r.computed = dec_kresult(j.at("computed"));
  r.fixture = dec_fixture(j.at("fixture"));
  r.items = dec_list<VerificationItem>(j.at("items"), dec_item);
  return r;
}

OutputDocument wrap(const char* kind, Json payload) {
  OutputDocument d;
  d.kind = kind;
  d.payload = std::move(payload);
  return d;
}

void expect_kind(const OutputDocument& d, const char* kind) {
  if (d.kind != kind)
    throw ParseError("expected a " + std::string(kind) + " document, got " + d.kind);
}

// json exceptions become ParseError
template <class F>
auto guarded(F f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

} // namespace

OutputDocument make_document(const GroupSpec& spec) {
  return wrap("group_spec", enc(spec));
}

OutputDocument make_document(const std::vector<ConjClass>& classes) {
  return wrap("conj_classes", enc_list(classes));
}

OutputDocument make_document(const KResult& r) {
  return wrap("k_result", enc(r));
}

OutputDocument make_document(const std::vector<VerificationReport>& reports) {
  return wrap("verification_reports", enc_list(reports));
}

std::string render_document(const OutputDocument& doc) {
  Json j{{"schema_version", doc.schema_version}, {"kind", doc.kind}, {"payload", doc.payload}};
  return j.dump(2) + "\n";
}

OutputDocument parse_document(std::string_view text) {
  return guarded([&] {
    Json j = Json::parse(text);
    OutputDocument d;
    d.schema_version = j.at("schema_version").get<std::string>();
    if (d.schema_version != kSchemaVersion)
      throw ParseError("unsupported schema version " + d.schema_version);
    d.kind = j.at("kind").get<std::string>();
    d.payload = j.at("payload");
    return d;
  });
}

GroupSpec spec_from(const OutputDocument& doc) {
  expect_kind(doc, "group_spec");
  return guarded([&] { return dec_spec(doc.payload); });
}

std::vector<ConjClass> classes_from(const OutputDocument& doc) {
  expect_kind(doc, "conj_classes");
  return guarded([&] { return dec_list<ConjClass>(doc.payload, dec_class); });
}

KResult kresult_from(const OutputDocument& doc) {
  expect_kind(doc, "k_result");
  return guarded([&] { return dec_kresult(doc.payload); });
}

std::vector<VerificationReport> reports_from(const OutputDocument& doc) {
  expect_kind(doc, "verification_reports");
  return guarded([&] { return dec_list<VerificationReport>(doc.payload, dec_report); });
}

} // namespace kcrystal
