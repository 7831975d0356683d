// Affine isometries in lattice coordinates and the wallpaper group catalog.
#ifndef KCRYSTAL_GROUP_HPP_
#define KCRYSTAL_GROUP_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>
#include "lattice.hpp"

namespace kcrystal {

// x -> lin * x + trans (column vectors)
struct AffineIso {
  Vec2 trans{Rational(0), Rational(0)};
  Mat2 lin;

  static AffineIso identity() { return AffineIso{}; }
  static AffineIso translation(const IVec2& a) { return AffineIso{to_vec(a), Mat2{}}; }
  Vec2 apply(const Vec2& x) const { return lin * x + trans; }
  bool operator==(const AffineIso& o) const { return trans == o.trans && lin == o.lin; }
  bool operator!=(const AffineIso& o) const { return !(*this == o); }
};

AffineIso compose(const AffineIso& g, const AffineIso& h);
AffineIso inverse(const AffineIso& g);
AffineIso power(const AffineIso& g, int k);
// h g h^-1
AffineIso conjugate(const AffineIso& h, const AffineIso& g);
// t(m)^-1 g t(m)
AffineIso conjugate_by_translation(const AffineIso& g, const IVec2& m);
// equality of the induced torus maps
bool equal_mod_lattice(const AffineIso& g, const AffineIso& h);
AffineIso reduce_mod_lattice(const AffineIso& g);
std::string to_string(const AffineIso& g);

struct IsoOrder {
  std::optional<int> torus;  // least k with g^k = (z, I), z integral
  std::optional<int> plane;  // least k with g^k = (0, I); empty = infinite
};
IsoOrder order(const AffineIso& g);

enum class ElementKind { Identity, Rotation, Reflection, Glide };
const char* kind_name(ElementKind k);

struct PointGroupElement {
  std::string label;
  AffineIso pullback;
  ElementKind kind = ElementKind::Identity;
  int lin_order = 1;
};

// Classify by det/trace; reflection vs glide by solvability of
// sum_i M^i (a + u) = 0 for some integer a.
ElementKind classify(const AffineIso& g);

struct GroupSpec {
  std::string name;
  std::string lattice_hint;
  size_t declared_order = 0;                // |D| as stated in the record
  std::vector<PointGroupElement> elements;  // elements[0] is the identity

  size_t size() const { return elements.size(); }
  // index of the element with the given linear part; npos if absent
  size_t find(const Mat2& lin) const;
  size_t find_label(std::string_view label) const;
  const PointGroupElement& operator[](size_t i) const { return elements[i]; }
  bool symmorphic() const;
  bool operator==(const GroupSpec& o) const;
  static constexpr size_t npos = size_t(-1);
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

// Group axioms mod Z^2, crystallographic orders and the cocycle identity
// s(d1 d2) = s(d1) + d1 s(d2) mod Z^2 for every pair.
ValidationReport validate_cocycle(const GroupSpec& spec);

// Builds kind/lin_order fields; throws on an invalid record.
GroupSpec make_spec(std::string name, std::string hint, size_t declared_order,
                    std::vector<PointGroupElement> elements);

const std::vector<std::string>& group_names();
// The shipped catalog; throws NotFound for unknown names.
const GroupSpec& catalog(std::string_view name);
const std::vector<GroupSpec>& full_catalog();

// Plain-text catalog format (see data/catalog.txt).
std::vector<GroupSpec> parse_catalog(std::string_view text);
std::string format_catalog(const std::vector<GroupSpec>& specs);

// Every element conjugated into the basis given by the columns of P:
// (u, M) -> (P^-1 u, P^-1 M P).
GroupSpec change_basis(const GroupSpec& spec, const Mat2& P);

} // namespace kcrystal
#endif
