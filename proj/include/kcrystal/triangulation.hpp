// Triangulations of T^2 invariant under the point-group action, and their
// orbit complexes.
#ifndef KCRYSTAL_TRIANGULATION_HPP_
#define KCRYSTAL_TRIANGULATION_HPP_

#include <vector>
#include "complex.hpp"
#include "group.hpp"

namespace kcrystal {

// Grid cells of the N x N subdivision of [0,1)^2:
//   Square4  - each square cut into 4 triangles at its center
//   TriPlus  - each square cut along the diagonal e1 + e2
//   TriMinus - each square cut along the diagonal e1 - e2
enum class GridStyle { Square4, TriPlus, TriMinus };
const char* style_name(GridStyle s);

using VertexAction = std::vector<std::vector<int>>;  // per element of D

struct EquivariantTriangulation {
  SimplicialComplex complex;
  VertexAction action;
  Mat2 basis;  // columns: grid basis vectors in lattice coordinates
  GridStyle style = GridStyle::Square4;
  int N = 12;
  int subdivisions = 1;
};

// The first grid in the order (catalog basis, reduced basis) x (Square4,
// TriPlus, TriMinus) whose line arrangement is invariant, barycentrically
// subdivided until the action is regular (at most twice).
EquivariantTriangulation equivariant_triangulation(const GroupSpec& spec, int N = 12);

// Is every simplex mapped to itself only by elements fixing it pointwise?
bool action_is_regular(const SimplicialComplex& sc, const VertexAction& action);

struct OrbitComplex {
  ChainComplex chain;
  // number of 2-cell faces lying on each 1-cell (1 marks a boundary edge)
  std::vector<int> edge_incidence;
  std::vector<std::array<int, 2>> edge_vertices;  // vertex orbits of each edge
};

// Cells are orbits, oriented like their lexicographically smallest member.
OrbitComplex quotient_complex(const SimplicialComplex& sc, const VertexAction& action);

} // namespace kcrystal
#endif
