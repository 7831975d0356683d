// SVG diagrams of the symmetry elements over a block of lattice cells.
#ifndef KCRYSTAL_RENDER_HPP_
#define KCRYSTAL_RENDER_HPP_

#include <array>
#include <string>
#include <vector>
#include "group.hpp"

namespace kcrystal {

struct Segment {
  Vec2 from, to;  // lattice coordinates
  bool operator==(const Segment& o) const { return from == o.from && to == o.to; }
};

struct RotationCenter {
  Vec2 at;
  int order = 2;  // largest rotation order at the point
};

// Everything inside [0, cells]^2, sorted.
struct SymmetryElements {
  std::vector<RotationCenter> centers;
  std::vector<Segment> mirrors;
  std::vector<Segment> glides;  // glide axes that are not mirrors
};

SymmetryElements symmetry_elements(const GroupSpec& spec, int cells);

// sum of M^T M over the point group: an invariant inner product
std::array<Int, 4> invariant_gram(const GroupSpec& spec);

std::string render_svg(const GroupSpec& spec, int cells = 3);
// Error when the file cannot be written
void write_svg(const GroupSpec& spec, const std::string& path, int cells = 3);

} // namespace kcrystal
#endif
