// Quotients X^g / C(g) and their homology.
#ifndef KCRYSTAL_QUOTIENT_HPP_
#define KCRYSTAL_QUOTIENT_HPP_

#include <optional>
#include <string>
#include <vector>
#include "fixed.hpp"
#include "triangulation.hpp"

namespace kcrystal {

struct Surface {
  std::string name;  // "sphere", "Klein bottle", ...
  int euler = 0;
  int boundary_components = 0;
  bool orientable = true;
  std::array<size_t, 3> cells{0, 0, 0};  // orbit cells
  std::vector<FinAbGroup> homology;      // H0, H1, H2

  bool operator==(const Surface& o) const {
    return name == o.name && euler == o.euler &&
           boundary_components == o.boundary_components && orientable == o.orientable &&
           cells == o.cells && homology == o.homology;
  }
};

struct QuotientSpace {
  int points = 0, intervals = 0, circles = 0;
  std::optional<Surface> surface;
  std::vector<FinAbGroup> homology;  // H0, H1, H2

  // "3 points", "interval", "2 intervals", "circle", "disk", "empty"
  std::string description() const;
  int euler() const;  // from the cell structure
  bool operator==(const QuotientSpace& o) const {
    return points == o.points && intervals == o.intervals && circles == o.circles &&
           surface == o.surface && homology == o.homology;
  }
};

std::string surface_name(int euler, int boundary_components, bool orientable);

QuotientSpace quotient_points(const FixedSet& fs, const Centralizer& c);
QuotientSpace quotient_1d(const FixedSet& fs, const Centralizer& c);
// T^2 / D through an equivariant triangulation at resolution N
QuotientSpace quotient_surface(const GroupSpec& spec, int N = 12);
Surface classify_surface(const OrbitComplex& oc);

// dispatch on the fixed-set kind
QuotientSpace quotient_of(const GroupSpec& spec, const FixedSet& fs, const Centralizer& c,
                          int N = 12);

} // namespace kcrystal
#endif
