#include "oracles.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int x, int y) { parent[find(x)] = find(y); }
  int count() {
    int n = 0;
    for (size_t i = 0; i < parent.size(); ++i)
      n += find(int(i)) == int(i);
    return n;
  }
};

long scaled(const kcrystal::Rational& q) {
  kcrystal::Rational s = q * L;
  if (s.get_den() != 1)
    throw std::runtime_error("coordinate not in (1/24)Z");
  return s.get_num().get_si();
}

long mod(long x) { return ((x % L) + L) % L; }

std::array<long, 4> lmul(const std::array<long, 4>& x, const std::array<long, 4>& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

long det(const std::array<long, 4>& m) { return m[0] * m[3] - m[1] * m[2]; }

std::vector<Aff> point_group(const kcrystal::GroupSpec& spec) {
  std::vector<Aff> out;
  for (auto& e : spec.elements)
    out.push_back(from(e.pullback));
  return out;
}

bool finite(const Aff& g) {
  int k = lin_order(g.m);
  if (k == 0)
    return false;
  Aff p;
  for (int i = 0; i < k; ++i)
    p = mul(p, g);
  return is_identity(p);
}

// primitive direction of the +1 eigenline of a reflection matrix
std::array<long, 2> mirror_dir(const std::array<long, 4>& m) {
  long a = 1 + m[0], c = m[2], b = m[1], d = 1 + m[3];
  std::array<long, 2> v = (a != 0 || c != 0) ? std::array<long, 2>{a, c}
                                             : std::array<long, 2>{b, d};
  long g = std::gcd(std::labs(v[0]), std::labs(v[1]));
  return {v[0] / g, v[1] / g};
}

std::array<long, 2> lapply(const std::array<long, 4>& m, const std::array<long, 2>& v) {
  return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]};
}

// elements t(b) * d, b in [-w, w]^2
std::vector<Aff> window_elements(const std::vector<Aff>& D, int w) {
  std::vector<Aff> out;
  for (auto& d : D)
    for (long i = -w; i <= w; ++i)
      for (long j = -w; j <= w; ++j)
        out.push_back(Aff{{d.t[0] + L * i, d.t[1] + L * j}, d.m});
  return out;
}

std::vector<Aff> commuting(const kcrystal::GroupSpec& spec, const Aff& g, int w) {
  std::vector<Aff> out;
  for (auto& h : window_elements(point_group(spec), w))
    if (mul(h, g) == mul(g, h))
      out.push_back(h);
  return out;
}

} // namespace

kcrystal::Rational ratio(long a, long b) {
  kcrystal::Rational q(a, b);
  q.canonicalize();
  return q;
}

Aff from(const kcrystal::AffineIso& g) {
  Aff a;
  a.t = {scaled(g.trans[0]), scaled(g.trans[1])};
  a.m = {g.lin.a.get_si(), g.lin.b.get_si(), g.lin.c.get_si(), g.lin.d.get_si()};
  return a;
}

Aff mul(const Aff& g, const Aff& h) {
  Aff r;
  auto mt = lapply(g.m, h.t);
  r.t = {g.t[0] + mt[0], g.t[1] + mt[1]};
  r.m = lmul(g.m, h.m);
  return r;
}

Aff inv(const Aff& g) {
  long dt = det(g.m);
  Aff r;
  r.m = {dt * g.m[3], -dt * g.m[1], -dt * g.m[2], dt * g.m[0]};
  auto t = lapply(r.m, g.t);
  r.t = {-t[0], -t[1]};
  return r;
}

bool is_identity(const Aff& g) { return g == Aff{}; }

int lin_order(const std::array<long, 4>& m) {
  std::array<long, 4> p = m;
  for (int k = 1; k <= 12; ++k) {
    if (p == std::array<long, 4>{1, 0, 0, 1})
      return k;
    p = lmul(p, m);
  }
  return 0;
}

Pt act(const Aff& g, const Pt& p) {
  auto v = lapply(g.m, p);
  return {mod(v[0] + g.t[0]), mod(v[1] + g.t[1])};
}

int fc_count_plane(const kcrystal::GroupSpec& spec, int elem_window, int conj_window) {
  auto D = point_group(spec);
  std::map<Aff, int> index;
  std::vector<Aff> els;
  for (auto& g : window_elements(D, elem_window))
    if (finite(g) && !index.count(g)) {
      index[g] = int(els.size());
      els.push_back(g);
    }
  auto conj = window_elements(D, conj_window);
  UnionFind uf(els.size());
  for (size_t i = 0; i < els.size(); ++i)
    for (auto& x : conj) {
      auto it = index.find(mul(mul(x, els[i]), inv(x)));
      if (it != index.end())
        uf.join(int(i), it->second);
    }
  return uf.count();
}

int fc_count_torus(const kcrystal::GroupSpec& spec) {
  auto D = point_group(spec);
  std::set<std::set<std::array<long, 4>>> classes;
  for (auto& d : D) {
    std::set<std::array<long, 4>> cls;
    for (auto& e : D)
      cls.insert(lmul(lmul(e.m, d.m), inv(e).m));
    classes.insert(cls);
  }
  return int(classes.size());
}

std::vector<Pt> grid_fixed(const Aff& g) {
  std::vector<Pt> out;
  for (long i = 0; i < L; ++i)
    for (long j = 0; j < L; ++j)
      if (act(g, {i, j}) == Pt{i, j})
        out.push_back({i, j});
  return out;
}

namespace {

// connected fixed circles of a torus reflection, as a component id per point
std::map<Pt, int> circle_components(const Aff& g, int* count) {
  auto F = grid_fixed(g);
  std::map<Pt, int> idx;
  for (auto& p : F)
    idx.emplace(p, int(idx.size()));
  auto dir = mirror_dir(g.m);
  UnionFind uf(F.size());
  for (auto& p : F) {
    Pt q{mod(p[0] + dir[0]), mod(p[1] + dir[1])};
    auto it = idx.find(q);
    if (it == idx.end())
      throw std::runtime_error("fixed set is not a union of lines");
    uf.join(idx[p], it->second);
  }
  std::map<int, int> relabel;
  std::map<Pt, int> comp;
  for (auto& p : F) {
    int r = uf.find(idx[p]);
    comp[p] = relabel.emplace(r, int(relabel.size())).first->second;
  }
  *count = int(relabel.size());
  return comp;
}

// points / intervals / circles of (fixed set) / (group H) given as maps on the grid
OrbitCount orbits(const Aff& g, const std::vector<Aff>& H) {
  OrbitCount out;
  if (g.m == std::array<long, 4>{1, 0, 0, 1}) {
    out.all = true;
    return out;
  }
  if (det(g.m) == 1) {
    auto F = grid_fixed(g);
    std::set<Pt> seen;
    for (auto& p : F) {
      if (seen.count(p))
        continue;
      ++out.points;
      for (auto& h : H)
        seen.insert(act(h, p));
    }
    return out;
  }
  int n = 0;
  auto comp = circle_components(g, &n);
  auto dir = mirror_dir(g.m);
  std::vector<Pt> sample(n);
  for (auto& [p, c] : comp)
    sample[c] = p;
  std::set<int> seen;
  for (int c = 0; c < n; ++c) {
    if (seen.count(c))
      continue;
    bool reversed = false;
    for (auto& h : H) {
      int image = comp.at(act(h, sample[c]));
      seen.insert(image);
      auto hd = lapply(h.m, dir);
      if (image == c && hd[0] == -dir[0] && hd[1] == -dir[1])
        reversed = true;
    }
    ++(reversed ? out.intervals : out.circles);
  }
  return out;
}

} // namespace

int grid_circles(const Aff& g) {
  int n = 0;
  circle_components(g, &n);
  return n;
}

OrbitCount torus_quotient(const kcrystal::GroupSpec& spec, size_t d) {
  auto D = point_group(spec);
  std::vector<Aff> C;
  for (auto& e : D)
    if (lmul(e.m, D[d].m) == lmul(D[d].m, e.m))
      C.push_back(e);
  return orbits(D[d], C);
}

OrbitCount plane_quotient(const kcrystal::GroupSpec& spec, const kcrystal::AffineIso& gi,
                          int window) {
  Aff g = from(gi);
  OrbitCount out;
  if (g.m == std::array<long, 4>{1, 0, 0, 1}) {
    out.all = true;
    return out;
  }
  if (det(g.m) == 1) {
    out.points = 1;
    return out;
  }
  auto dir = mirror_dir(g.m);
  bool translated = false, reversed = false;
  for (auto& h : commuting(spec, g, window)) {
    if (h.m == std::array<long, 4>{1, 0, 0, 1} && (h.t[0] != 0 || h.t[1] != 0))
      translated = true;
    auto hd = lapply(h.m, dir);
    if (hd[0] == -dir[0] && hd[1] == -dir[1])
      reversed = true;
  }
  if (!translated)
    throw std::runtime_error("window too small");
  ++(reversed ? out.intervals : out.circles);
  return out;
}

CentralizerCount plane_centralizer(const kcrystal::GroupSpec& spec,
                                   const kcrystal::AffineIso& gi, int window) {
  Aff g = from(gi);
  auto S = commuting(spec, g, window);
  std::vector<std::array<long, 2>> T;
  for (auto& h : S)
    if (h.m == std::array<long, 4>{1, 0, 0, 1} && (h.t[0] != 0 || h.t[1] != 0))
      T.push_back(h.t);
  CentralizerCount out;
  if (T.empty()) {
    out.cosets = int(S.size());
    return out;
  }
  out.trans_rank = 1;
  for (auto& t : T)
    if (t[0] * T[0][1] - t[1] * T[0][0] != 0)
      out.trans_rank = 2;
  std::set<Aff> reps;
  if (out.trans_rank == 2) {
    for (auto h : S) {
      h.t = {mod(h.t[0]), mod(h.t[1])};
      reps.insert(h);
    }
  } else {
    auto v = T[0];
    for (auto& t : T)
      if (t[0] * t[0] + t[1] * t[1] < v[0] * v[0] + v[1] * v[1])
        v = t;
    long vv = v[0] * v[0] + v[1] * v[1];
    for (auto h : S) {
      long p = h.t[0] * v[0] + h.t[1] * v[1];
      long k = p >= 0 ? p / vv : -((-p + vv - 1) / vv);
      h.t = {h.t[0] - k * v[0], h.t[1] - k * v[1]};
      reps.insert(h);
    }
  }
  out.cosets = int(reps.size());
  return out;
}

int orbit_space_euler(const kcrystal::GroupSpec& spec) {
  long sum = 0;
  for (auto& d : point_group(spec))
    if (d.m != std::array<long, 4>{1, 0, 0, 1} && det(d.m) == 1)
      sum += long(grid_fixed(d).size());
  if (sum % long(spec.size()) != 0)
    throw std::runtime_error("orbit count is not an integer");
  return int(sum / long(spec.size()));
}

bool acts_freely(const kcrystal::GroupSpec& spec) {
  auto D = point_group(spec);
  for (size_t i = 1; i < D.size(); ++i)
    if (!grid_fixed(D[i]).empty())
      return false;
  return true;
}

bool preserves_orientation(const kcrystal::GroupSpec& spec) {
  for (auto& d : point_group(spec))
    if (det(d.m) != 1)
      return false;
  return true;
}

} // namespace oracle
