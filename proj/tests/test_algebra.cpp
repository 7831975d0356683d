#include <algorithm>
#include <random>
#include <set>
#include <doctest.h>
#include "kcrystal/complex.hpp"

using namespace kcrystal;

namespace {

IntMat random_matrix(std::mt19937& rng) {
  std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9), sparse(0, 3);
  IntMat m(dim(rng), dim(rng));
  for (auto& x : m.a)
    x = sparse(rng) == 0 ? 0 : entry(rng);
  return m;
}

bool diagonal_ok(const IntMat& D) {
  Int prev = 1;
  bool zero_seen = false;
  for (size_t i = 0; i < D.rows; ++i)
    for (size_t j = 0; j < D.cols; ++j) {
      const Int& x = D.at(i, j);
      if (i != j) {
        if (x != 0)
          return false;
        continue;
      }
      if (x < 0)
        return false;
      if (x == 0) {
        zero_seen = true;
        continue;
      }
      if (zero_seen || x % prev != 0)
        return false;
      prev = x;
    }
  return true;
}

ChainComplex one_cell_complex(size_t edges, std::vector<Chain> faces) {
  ChainComplex cc;
  cc.cells = {1, edges, faces.size()};
  cc.boundary[1].assign(edges, Chain{});
  cc.boundary[2] = std::move(faces);
  return cc;
}

std::vector<FinAbGroup> groups(std::initializer_list<const char*> s) {
  std::vector<FinAbGroup> out;
  for (auto x : s)
    out.push_back(parse_abgroup(x));
  return out;
}

} // namespace

TEST_CASE("rationals") {
  CHECK(to_string(parse_rational("-2/4")) == "-1/2");
  CHECK(to_string(parse_rational("3")) == "3");
  CHECK(frac(Rational(-1, 3)) == Rational(2, 3));
  CHECK(floor_of(Rational(-1, 3)) == -1);
  CHECK(is_integer(parse_rational("4/2")));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("smith normal form contract on random matrices") {
  std::mt19937 rng(20240611);
  for (int n = 0; n < 1500; ++n) {
    IntMat A = random_matrix(rng);
    Snf s = smith_normal_form(A);
    REQUIRE(s.U.rows == A.rows);
    REQUIRE(s.V.cols == A.cols);
    CHECK(s.U * A * s.V == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    CHECK(diagonal_ok(s.D));
    CHECK(invariant_factors(A).size() == rank_of(A));
  }
}

TEST_CASE("invariant factors") {
  IntMat A{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  CHECK(invariant_factors(A) == std::vector<Int>{2, 6, 12});
  CHECK(rank_of(IntMat{{1, 2}, {2, 4}}) == 1);
  CHECK(invariant_factors(IntMat(2, 3)).empty());
}

TEST_CASE("integer solutions") {
  auto s = solve_integer(IntMat{{2, 4}}, {6});
  REQUIRE(s.solvable);
  CHECK(2 * s.particular[0] + 4 * s.particular[1] == 6);
  REQUIRE(s.kernel.size() == 1);
  CHECK(2 * s.kernel[0][0] + 4 * s.kernel[0][1] == 0);
  CHECK_FALSE(solve_integer(IntMat{{2, 4}}, {3}).solvable);
}

TEST_CASE("abelian groups") {
  CHECK(FinAbGroup::from_cyclic({2, 3}) == parse_abgroup("Z/6"));
  CHECK(FinAbGroup::from_cyclic({0, 4, 2, 1}) == parse_abgroup("Z + Z/2 + Z/4"));
  CHECK(to_string(parse_abgroup("Z⊕Z₂")) == "Z + Z/2");
  CHECK(to_string(parse_abgroup("Z^3")) == "Z^3");
  CHECK(to_string(FinAbGroup()) == "0");
  CHECK(to_display(parse_abgroup("Z^2 + Z/2")) == "Z^2⊕Z₂");
  CHECK(direct_sum(parse_abgroup("Z/2"), parse_abgroup("Z/3")) == parse_abgroup("Z/6"));
  for (auto s : {"0", "Z", "Z^4", "Z/2 + Z/2", "Z + Z/3 + Z/6"})
    CHECK(to_string(parse_abgroup(to_string(parse_abgroup(s)))) == s);
  CHECK_THROWS_AS(parse_abgroup("Q"), ParseError);
}

TEST_CASE("standard CW complexes") {
  auto torus = one_cell_complex(2, {Chain{}});
  auto klein = one_cell_complex(2, {Chain{{0, 2}}});
  auto sphere = one_cell_complex(0, {Chain{}});
  auto rp2 = one_cell_complex(1, {Chain{{0, 2}}});
  CHECK(homology_of(torus) == groups({"Z", "Z^2", "Z"}));
  CHECK(homology_of(klein) == groups({"Z", "Z + Z/2", "0"}));
  CHECK(homology_of(sphere) == groups({"Z", "0", "Z"}));
  CHECK(homology_of(rp2) == groups({"Z", "Z/2", "0"}));
  CHECK(homology_dense(klein) == homology_of(klein));
  CHECK(homology_dense(rp2) == homology_of(rp2));
  // H_1 of RP^2 straight from the boundary matrices
  CHECK(abgroup_from_matrices(IntMat(1, 1), IntMat{{2}}) == parse_abgroup("Z/2"));
}

TEST_CASE("simplicial torus") {
  SimplicialComplex sc;
  sc.scale = 3;
  auto id = [](int i, int j) { return 3 * ((i + 3) % 3) + (j + 3) % 3; };
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j)
      sc.vertices.push_back({i, j});
  std::set<std::array<int, 2>> edges;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (auto t : {std::array<int, 3>{id(i, j), id(i + 1, j), id(i + 1, j + 1)},
                     std::array<int, 3>{id(i, j), id(i, j + 1), id(i + 1, j + 1)}}) {
        std::sort(t.begin(), t.end());
        sc.triangles.push_back(t);
        edges.insert({t[0], t[1]});
        edges.insert({t[0], t[2]});
        edges.insert({t[1], t[2]});
      }
  sc.edges.assign(edges.begin(), edges.end());
  auto cc = sc.chain();
  check_complex(cc);
  CHECK(cc.euler_characteristic() == 0);
  CHECK(homology_of(cc) == groups({"Z", "Z^2", "Z"}));
  CHECK(homology_dense(cc) == homology_of(cc));
}

TEST_CASE("malformed complexes") {
  ChainComplex bad = one_cell_complex(1, {Chain{{0, 1}}});
  bad.boundary[1][0] = Chain{{0, 1}};  // d1 d2 != 0
  CHECK_THROWS_AS(check_complex(bad), MalformedComplex);
  ChainComplex out_of_range = one_cell_complex(1, {Chain{{5, 1}}});
  CHECK_THROWS_AS(check_complex(out_of_range), MalformedComplex);
}
