// Exact arithmetic: rationals, integer matrices, Smith normal form and
// finitely generated abelian groups.
#ifndef KCRYSTAL_ALGEBRA_HPP_
#define KCRYSTAL_ALGEBRA_HPP_

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kcrystal {

using Int = mpz_class;
using Rational = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotFound : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct MalformedComplex : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct ResolutionError : Error { using Error::Error; };

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

Int floor_of(const Rational& q);
// representative in [0,1)
Rational frac(const Rational& q);
bool is_integer(const Rational& q);
std::string to_string(const Int& n);
// "p/q", or "p" when q = 1
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view s);

struct IntMat {
  size_t rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  IntMat(std::initializer_list<std::initializer_list<long>> init);
  static IntMat identity(size_t n);

  Int& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Int& at(size_t i, size_t j) const { return a[i * cols + j]; }
  bool is_zero() const;
  IntMat transposed() const;
  bool operator==(const IntMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

IntMat operator*(const IntMat& x, const IntMat& y);
Int determinant(const IntMat& m);  // square only
std::string to_string(const IntMat& m);

struct Snf {
  IntMat U, D, V;  // U * A * V == D
};

// Pivot: smallest nonzero |a_ij|, ties to the lowest (row, col).
Snf smith_normal_form(const IntMat& A);
std::vector<Int> invariant_factors(const IntMat& A);  // nonzero diagonal of D
size_t rank_of(const IntMat& A);

// All integer solutions of A x = b: empty optional-like flag, particular
// solution and a kernel basis.
struct IntegerSolution {
  bool solvable = false;
  std::vector<Int> particular;
  std::vector<std::vector<Int>> kernel;
};
IntegerSolution solve_integer(const IntMat& A, const std::vector<Int>& b);

struct FinAbGroup {
  int free_rank = 0;
  std::vector<Int> torsion;  // d1 | d2 | ..., each >= 2

  FinAbGroup() = default;
  explicit FinAbGroup(int r) : free_rank(r) {}
  // from an arbitrary list of cyclic orders (0 = Z, 1 dropped)
  static FinAbGroup from_cyclic(const std::vector<Int>& orders);
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const FinAbGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool operator!=(const FinAbGroup& o) const { return !(*this == o); }
};

FinAbGroup direct_sum(const FinAbGroup& x, const FinAbGroup& y);
// "Z^2 + Z/2", "Z", "0"
std::string to_string(const FinAbGroup& g);
// Unicode notation, e.g. "Z⊕Z₂", "Z^3"
std::string to_display(const FinAbGroup& g);
// accepts "0", "Z", "Z^3", "Z/2", "Z_2", "Z2" and sums joined by '+' or '⊕'
FinAbGroup parse_abgroup(std::string_view s);

// H = ker(out) / im(in); requires out * in == 0.
FinAbGroup abgroup_from_matrices(const IntMat& boundary_out,
                                 const IntMat& boundary_in);

} // namespace kcrystal
#endif
