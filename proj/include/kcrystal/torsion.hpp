// Conjugacy classes of finite-order elements.
//
// Plane mode works in the crystal group G itself. Torus mode works in the
// finite group D acting on T^2 through its pullbacks.
#ifndef KCRYSTAL_TORSION_HPP_
#define KCRYSTAL_TORSION_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>
#include "group.hpp"

namespace kcrystal {

enum class Mode { Plane, Torus };
const char* mode_name(Mode m);
Mode parse_mode(std::string_view s);

enum class ClassKind { Identity, Rotation, Reflection, Glide };
const char* kind_name(ClassKind k);
ClassKind parse_class_kind(std::string_view s);

struct ConjClass {
  Mode mode = Mode::Plane;
  AffineIso rep;
  int order = 1;
  ClassKind kind = ClassKind::Identity;
  Vec2 center{};       // plane rotations: the fixed point of rep
  Circle axis{};       // plane reflections: a point of the axis and its direction
  std::string label;
  size_t element = 0;            // index in spec.elements of rep's linear part
  std::vector<size_t> members;   // torus mode: the D-conjugacy class

  bool operator==(const ConjClass& o) const;
};

// (a + u_d, M_d) for a in [-window, window]^2 with sum_i M^i (a + u_d) = 0.
std::vector<AffineIso> finite_order_translates(const GroupSpec& spec, size_t d,
                                               int window);

// Sorted deterministically: plane classes by their canonical key, torus
// classes in catalog order of their first member. The window is where the
// search for finite-order translates starts; it widens until every class is
// reached.
std::vector<ConjClass> enumerate_fc(const GroupSpec& spec, Mode mode, int window = 2);

// Some conjugator t(a) * pullback(d), a in [-window, window]^2, maps g to h.
bool class_equal(const AffineIso& g, const AffineIso& h, const GroupSpec& spec,
                 int window);

// Exact canonical form of a finite-order plane element: the representative
// of its class in enumerate_fc(spec, Plane).
AffineIso canonical_rep(const GroupSpec& spec, const AffineIso& g);

// Labels in the style "s∘t∘σ^3", "2t∘σ", "-s∘ρ1", "id".
std::string element_label(const GroupSpec& spec, const AffineIso& g);
std::optional<AffineIso> parse_element_label(const GroupSpec& spec,
                                             std::string_view label);

} // namespace kcrystal
#endif
