// Single-field corruptions of catalog records, each of which the cocycle
// validator must reject.
#ifndef KCRYSTAL_TESTS_MUTATIONS_HPP_
#define KCRYSTAL_TESTS_MUTATIONS_HPP_

#include <functional>
#include <vector>
#include "kcrystal/group.hpp"

namespace mutation {

using namespace kcrystal;

struct Mutation {
  const char* group;
  const char* what;
  std::function<void(GroupSpec&)> apply;
};

inline PointGroupElement& el(GroupSpec& s, const char* label) {
  return s.elements[s.find_label(label)];
}

inline const std::vector<Mutation>& mutations() {
  static const std::vector<Mutation> m = {
      {"pg", "glide translation 1/3", [](GroupSpec& s) { el(s, "ρ").pullback.trans[0] = Rational(1, 3); }},
      {"pg", "printed 'o' read as 1", [](GroupSpec& s) { el(s, "ρ").pullback.lin.c = 1; }},
      {"pmg", "ρ1 translation dropped", [](GroupSpec& s) { el(s, "ρ1").pullback.trans = {0, 0}; }},
      {"pgg2", "σ translation added", [](GroupSpec& s) { el(s, "σ").pullback.trans[0] = Rational(1, 2); }},
      {"p4mg", "ρ1 translation dropped", [](GroupSpec& s) { el(s, "ρ1").pullback.trans = {0, 0}; }},
      {"p2", "determinant 3", [](GroupSpec& s) { el(s, "σ").pullback.lin.a = -3; }},
      {"p4", "shear", [](GroupSpec& s) { el(s, "σ").pullback.lin = Mat2{1, 1, 0, 1}; }},
      {"p6", "σ^3 as printed", [](GroupSpec& s) { el(s, "σ^3").pullback.lin = Mat2{-1, 0, 1, -1}; }},
      {"p6", "infinite order, det -1", [](GroupSpec& s) { el(s, "σ").pullback.lin = Mat2{0, 1, 1, 1}; }},
      {"pm", "duplicate label", [](GroupSpec& s) { el(s, "ρ").label = "id"; }},
      {"p3", "declared order", [](GroupSpec& s) { s.declared_order = 6; }},
      {"cm", "repeated linear part", [](GroupSpec& s) { el(s, "ρ").pullback.lin = Mat2{}; }},
      {"pmm2", "ρ1 swapped for a diagonal mirror", [](GroupSpec& s) { el(s, "ρ1").pullback.lin = Mat2{0, 1, 1, 0}; }},
      {"p3", "σ replaced by a quarter turn", [](GroupSpec& s) { el(s, "σ").pullback.lin = Mat2{0, -1, 1, 0}; }},
      {"p4mm", "first element not the identity", [](GroupSpec& s) { std::swap(s.elements[0], s.elements[1]); }},
      {"p1", "identity translated", [](GroupSpec& s) { s.elements[0].pullback.trans[1] = Rational(1, 2); }},
      {"p6mm", "ρ1 translation 1/2", [](GroupSpec& s) { el(s, "ρ1").pullback.trans[1] = Rational(1, 2); }},
  };
  return m;
}

} // namespace mutation
#endif
