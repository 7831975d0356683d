// K_0 and K_1 as sums over finite-order classes of the homology of
// X^g / C(g): even degrees feed K_0, odd degrees K_1.
#ifndef KCRYSTAL_KHOMOLOGY_HPP_
#define KCRYSTAL_KHOMOLOGY_HPP_

#include <string>
#include <utility>
#include <vector>
#include "quotient.hpp"

namespace kcrystal {

struct ClassTerm {
  ConjClass cls;
  FixedSet fixed;
  Centralizer centralizer;
  QuotientSpace quotient;
  FinAbGroup even, odd;

  bool operator==(const ClassTerm& o) const {
    return cls == o.cls && fixed == o.fixed && centralizer == o.centralizer &&
           quotient == o.quotient && even == o.even && odd == o.odd;
  }
};

struct KResult {
  std::string group;
  Mode mode = Mode::Plane;
  std::vector<ClassTerm> per_class;
  FinAbGroup K0, K1;

  bool operator==(const KResult& o) const {
    return group == o.group && mode == o.mode && per_class == o.per_class &&
           K0 == o.K0 && K1 == o.K1;
  }
};

ClassTerm class_term(const GroupSpec& spec, const ConjClass& c, int N = 12);
KResult k_homology(const GroupSpec& spec, Mode mode, int N = 12);
// free ranks of K_0 and K_1
std::pair<int, int> rationalize(const KResult& r);

} // namespace kcrystal
#endif
