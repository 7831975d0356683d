// Brute-force reference computations for the test suite.
//
// Everything here uses plain integers with coordinates scaled by L = 24, so
// none of it shares arithmetic with the library.
#ifndef KCRYSTAL_TESTS_ORACLES_HPP_
#define KCRYSTAL_TESTS_ORACLES_HPP_

#include <array>
#include <optional>
#include <set>
#include <vector>
#include "kcrystal/group.hpp"

namespace oracle {

constexpr long L = 24;

struct Aff {
  std::array<long, 2> t{0, 0};  // translation times L
  std::array<long, 4> m{1, 0, 0, 1};
  bool operator<(const Aff& o) const { return std::tie(t, m) < std::tie(o.t, o.m); }
  bool operator==(const Aff& o) const { return t == o.t && m == o.m; }
};

// a/b in lowest terms
kcrystal::Rational ratio(long a, long b);

Aff from(const kcrystal::AffineIso& g);
Aff mul(const Aff& g, const Aff& h);
Aff inv(const Aff& g);
bool is_identity(const Aff& g);
int lin_order(const std::array<long, 4>& m);  // 0 for infinite order

using Pt = std::array<long, 2>;  // a point of (1/L)Z^2 mod 1, coordinates in [0, L)
Pt act(const Aff& g, const Pt& p);

// plane FC(G): finite-order elements in a translation window, joined by
// conjugators t(b) * d with b in [-conj_window, conj_window]^2
int fc_count_plane(const kcrystal::GroupSpec& spec, int elem_window = 2, int conj_window = 3);
// conjugacy classes of D by linear parts
int fc_count_torus(const kcrystal::GroupSpec& spec);

// fixed points of the torus map on the (1/L)-grid
std::vector<Pt> grid_fixed(const Aff& g);

struct OrbitCount {
  int points = 0, intervals = 0, circles = 0;
  bool all = false;  // g acts trivially
};
// X^g / C_D(d) for element d of the point group, from the grid
OrbitCount torus_quotient(const kcrystal::GroupSpec& spec, size_t d);
// number of connected fixed circles of an orientation-reversing torus map
int grid_circles(const Aff& g);

// X^g / C_G(g) for a finite-order plane element
OrbitCount plane_quotient(const kcrystal::GroupSpec& spec, const kcrystal::AffineIso& g,
                          int window = 3);

// plane centralizer, brute force over a window: rank of the translation
// part and number of cosets
struct CentralizerCount {
  int trans_rank = 0;
  int cosets = 0;
};
CentralizerCount plane_centralizer(const kcrystal::GroupSpec& spec,
                                   const kcrystal::AffineIso& g, int window = 3);

// chi(T^2 / D) = (1/|D|) sum_d chi(Fix d), fixed sets counted on the grid
int orbit_space_euler(const kcrystal::GroupSpec& spec);
// T^2 / D is a closed surface when no nontrivial element has a fixed point
bool acts_freely(const kcrystal::GroupSpec& spec);
bool preserves_orientation(const kcrystal::GroupSpec& spec);

} // namespace oracle
#endif
