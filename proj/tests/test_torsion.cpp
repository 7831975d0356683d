#include <doctest.h>
#include "kcrystal/torsion.hpp"
#include "oracles.hpp"

using namespace kcrystal;

TEST_CASE("class counts against brute force") {
  for (auto& spec : full_catalog()) {
    CAPTURE(spec.name);
    CHECK(enumerate_fc(spec, Mode::Plane).size() == size_t(oracle::fc_count_plane(spec)));
    CHECK(enumerate_fc(spec, Mode::Torus).size() == size_t(oracle::fc_count_torus(spec)));
  }
}

TEST_CASE("enumeration does not depend on the window") {
  for (auto& spec : full_catalog()) {
    CAPTURE(spec.name);
    CHECK(enumerate_fc(spec, Mode::Plane, 2) == enumerate_fc(spec, Mode::Plane, 3));
    CHECK(enumerate_fc(spec, Mode::Plane, 2) == enumerate_fc(spec, Mode::Plane, 4));
  }
}

TEST_CASE("small groups") {
  CHECK(enumerate_fc(catalog("p1"), Mode::Plane).size() == 1);
  CHECK(enumerate_fc(catalog("pg"), Mode::Plane).size() == 1);
  CHECK(enumerate_fc(catalog("pg"), Mode::Torus).size() == 2);
  auto p2 = enumerate_fc(catalog("p2"), Mode::Plane);
  REQUIRE(p2.size() == 5);
  CHECK(p2[0].kind == ClassKind::Identity);
  for (size_t i = 1; i < p2.size(); ++i) {
    CHECK(p2[i].kind == ClassKind::Rotation);
    CHECK(p2[i].order == 2);
    CHECK(p2[i].rep.apply(p2[i].center) == p2[i].center);
  }
}

TEST_CASE("classes are distinct and labels parse back") {
  for (auto& spec : full_catalog()) {
    CAPTURE(spec.name);
    auto cls = enumerate_fc(spec, Mode::Plane);
    for (size_t i = 0; i < cls.size(); ++i) {
      CAPTURE(cls[i].label);
      CHECK(canonical_rep(spec, cls[i].rep) == cls[i].rep);
      auto parsed = parse_element_label(spec, cls[i].label);
      REQUIRE(parsed.has_value());
      CHECK(canonical_rep(spec, *parsed) == cls[i].rep);
      for (size_t j = i + 1; j < cls.size(); ++j)
        CHECK_FALSE(class_equal(cls[i].rep, cls[j].rep, spec, 3));
    }
  }
}

TEST_CASE("conjugates have the same canonical form") {
  const GroupSpec& spec = catalog("p4mg");
  for (auto& c : enumerate_fc(spec, Mode::Plane))
    for (auto& e : spec.elements)
      for (int i = -2; i <= 2; ++i) {
        AffineIso x = compose(AffineIso::translation({i, 1 - i}), e.pullback);
        CHECK(canonical_rep(spec, conjugate(x, c.rep)) == c.rep);
      }
}

TEST_CASE("torus classes partition the point group") {
  for (auto& spec : full_catalog()) {
    size_t total = 0;
    for (auto& c : enumerate_fc(spec, Mode::Torus))
      total += c.members.size();
    CHECK(total == spec.size());
  }
}

TEST_CASE("labels") {
  const GroupSpec& p6 = catalog("p6");
  CHECK(parse_element_label(p6, "id") == AffineIso::identity());
  CHECK_FALSE(parse_element_label(p6, "ρ7").has_value());
  auto g = parse_element_label(p6, "s∘t∘σ^3");
  REQUIRE(g.has_value());
  CHECK(element_label(p6, *g) == "s∘t∘σ^3");
  CHECK(mode_name(parse_mode("torus")) == std::string("torus"));
  CHECK_THROWS_AS(parse_mode("sphere"), ParseError);
}
