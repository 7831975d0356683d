#include <doctest.h>
#include "kcrystal/document.hpp"

using namespace kcrystal;

namespace {

OutputDocument reparse(const OutputDocument& d) { return parse_document(render_document(d)); }

} // namespace

TEST_CASE("documents round-trip") {
  for (auto& spec : full_catalog()) {
    CAPTURE(spec.name);
    CHECK(spec_from(reparse(make_document(spec))) == spec);
    for (Mode m : {Mode::Plane, Mode::Torus}) {
      auto cls = enumerate_fc(spec, m);
      CHECK(classes_from(reparse(make_document(cls))) == cls);
    }
    KResult r = k_homology(spec, Mode::Plane);
    CHECK(kresult_from(reparse(make_document(r))) == r);
  }
  auto reports = verify_against_tables();
  CHECK(reports_from(reparse(make_document(reports))) == reports);
}

TEST_CASE("document rendering") {
  auto doc = make_document(k_homology(catalog("pg"), Mode::Plane));
  std::string text = render_document(doc);
  CHECK(text == render_document(make_document(k_homology(catalog("pg"), Mode::Plane))));
  CHECK(text.find("\"schema_version\": \"1\"") != std::string::npos);
  CHECK(text.find("\"Z + Z/2\"") != std::string::npos);
  auto spec = render_document(make_document(catalog("pg")));
  CHECK(spec.find("\"1/2\"") != std::string::npos);
}

TEST_CASE("document errors") {
  CHECK_THROWS_AS(parse_document("{"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"schema_version": "9", "kind": "k_result", "payload": {}})"),
                  ParseError);
  auto doc = make_document(catalog("p1"));
  CHECK_THROWS_AS(kresult_from(doc), ParseError);
  doc.payload.erase("elements");
  CHECK_THROWS_AS(spec_from(doc), ParseError);
}
