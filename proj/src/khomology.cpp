#include "kcrystal/khomology.hpp"

namespace kcrystal {

ClassTerm class_term(const GroupSpec& spec, const ConjClass& c, int N) {
  ClassTerm t;
  t.cls = c;
  t.fixed = fixed_set(c);
  t.centralizer = centralizer(c.rep, spec, c.mode);
  t.quotient = quotient_of(spec, t.fixed, t.centralizer, N);
  const auto& h = t.quotient.homology;
  t.even = direct_sum(h[0], h[2]);
  t.odd = h[1];
  return t;
}

KResult k_homology(const GroupSpec& spec, Mode mode, int N) {
  KResult r;
  r.group = spec.name;
  r.mode = mode;
  for (const ConjClass& c : enumerate_fc(spec, mode)) {
    ClassTerm t = class_term(spec, c, N);
    r.K0 = direct_sum(r.K0, t.even);
    r.K1 = direct_sum(r.K1, t.odd);
    r.per_class.push_back(std::move(t));
  }
  int betti = 0;
  for (auto& t : r.per_class)
    for (auto& h : t.quotient.homology)
      betti += h.free_rank;
  if (betti != r.K0.free_rank + r.K1.free_rank)
    fail("internal: K ranks disagree with the total Betti number");
  return r;
}

std::pair<int, int> rationalize(const KResult& r) {
  return {r.K0.free_rank, r.K1.free_rank};
}

} // namespace kcrystal
