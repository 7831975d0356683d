// Finite chain complexes of dimension <= 2 and their integral homology.
#ifndef KCRYSTAL_COMPLEX_HPP_
#define KCRYSTAL_COMPLEX_HPP_

#include <array>
#include <string>
#include <utility>
#include <vector>
#include "algebra.hpp"

namespace kcrystal {

// Sparse boundary of one cell: (face index, coefficient), sorted by face.
using Chain = std::vector<std::pair<int, long>>;

struct ChainComplex {
  std::array<size_t, 3> cells{0, 0, 0};
  // boundary[k][i] is the boundary of the i-th k-cell (k = 1, 2)
  std::array<std::vector<Chain>, 3> boundary;

  int euler_characteristic() const {
    return int(cells[0]) - int(cells[1]) + int(cells[2]);
  }
};

IntMat boundary_matrix(const ChainComplex& cc, int k);
// throws MalformedComplex on inconsistent indices or d o d != 0
void check_complex(const ChainComplex& cc);
// H_0, H_1, H_2 via sparse unit-pivot elimination followed by dense SNF
std::vector<FinAbGroup> homology_of(const ChainComplex& cc);
// H_0, H_1, H_2 via dense SNF only (small complexes)
std::vector<FinAbGroup> homology_dense(const ChainComplex& cc);
// plain-text cell list: "<dim> <index> : <face>*<coef> ..."
std::string dump_cells(const ChainComplex& cc);

struct SimplicialComplex {
  long scale = 1;  // vertex coordinates are integers mod scale
  std::vector<std::array<long, 2>> vertices;
  std::vector<std::array<int, 2>> edges;      // increasing vertex ids
  std::vector<std::array<int, 3>> triangles;  // increasing vertex ids

  Rational coord(int v, int axis) const { return Rational(vertices[v][axis], scale); }
  // oriented by increasing vertex order
  ChainComplex chain() const;
};

} // namespace kcrystal
#endif
