// Fixed sets and centralizers of finite-order elements.
#ifndef KCRYSTAL_FIXED_HPP_
#define KCRYSTAL_FIXED_HPP_

#include <vector>
#include "torsion.hpp"

namespace kcrystal {

struct FixedSet {
  enum class Kind { Empty, Points, Lines, All };
  Mode space = Mode::Plane;
  Kind kind = Kind::Empty;
  // plane: the exact fixed point; torus: points of [0,1)^2
  std::vector<Vec2> points;
  // plane: one line (base on the line, direction); torus: circles
  std::vector<Circle> lines;

  size_t components() const { return points.size() + lines.size(); }
  bool operator==(const FixedSet& o) const {
    return space == o.space && kind == o.kind && points == o.points && lines == o.lines;
  }
};

const char* kind_name(FixedSet::Kind k);
FixedSet::Kind parse_fixed_kind(std::string_view s);

// Solutions of g x = x in R^2; DomainError for infinite-order g.
FixedSet fixed_set_plane(const AffineIso& g);
// Solutions of M x + u = x mod Z^2.
FixedSet fixed_set_torus(const AffineIso& g);
FixedSet fixed_set(const ConjClass& c);

struct Centralizer {
  int trans_rank = 0;
  std::vector<IVec2> trans_basis;
  // one element per coset of the translation part
  std::vector<AffineIso> finite_parts;

  bool operator==(const Centralizer& o) const {
    return trans_rank == o.trans_rank && trans_basis == o.trans_basis &&
           finite_parts == o.finite_parts;
  }
};

// Plane mode: C_G(g). Torus mode: the pullbacks of C_D(d), d = class of g.
Centralizer centralizer(const AffineIso& g, const GroupSpec& spec, Mode mode);

} // namespace kcrystal
#endif
