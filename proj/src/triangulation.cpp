#include "kcrystal/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace kcrystal {

const char* style_name(GridStyle s) {
  switch (s) {
    case GridStyle::Square4: return "square4";
    case GridStyle::TriPlus: return "tri+";
    case GridStyle::TriMinus: return "tri-";
  }
  return "?";
}

namespace {

using Pt = std::array<long, 2>;
using Tri = std::array<Pt, 3>;

// normals of the grid line families
std::vector<IVec2> normals(GridStyle s) {
  auto v = [](long a, long b) { return IVec2{Int(a), Int(b)}; };
  switch (s) {
    case GridStyle::Square4: return {v(1, 0), v(0, 1), v(1, 1), v(1, -1)};
    case GridStyle::TriPlus: return {v(1, 0), v(0, 1), v(1, -1)};
    case GridStyle::TriMinus: return {v(1, 0), v(0, 1), v(1, 1)};
  }
  return {};
}

// x -> M x + u maps the line family {phi(x) in Z/N : phi in normals} to itself
bool arrangement_invariant(GridStyle s, const AffineIso& g, int N) {
  auto phis = normals(s);
  Mat2 inv = inverse(g.lin);
  for (const IVec2& phi : phis) {
    IVec2 img{Int(phi[0] * inv.a + phi[1] * inv.c), Int(phi[0] * inv.b + phi[1] * inv.d)};
    IVec2 neg{Int(-img[0]), Int(-img[1])};
    bool found = std::any_of(phis.begin(), phis.end(),
                             [&](const IVec2& q) { return q == img || q == neg; });
    if (!found)
      return false;
    Rational off = (img[0] * g.trans[0] + img[1] * g.trans[1]) * N;
    if (!is_integer(off))
      return false;
  }
  return true;
}

std::vector<AffineIso> in_basis(const GroupSpec& spec, const Mat2& B) {
  Mat2 Bi = inverse(B);
  std::vector<AffineIso> out;
  for (auto& e : spec.elements)
    out.push_back(AffineIso{Bi * e.pullback.trans, Bi * e.pullback.lin * B});
  return out;
}

// Lagrange-Gauss reduction for the D-invariant form sum M^T M
Mat2 reduced_basis(const GroupSpec& spec) {
  Int q00 = 0, q01 = 0, q11 = 0;
  for (auto& e : spec.elements) {
    const Mat2& m = e.pullback.lin;
    q00 += m.a * m.a + m.c * m.c;
    q01 += m.a * m.b + m.c * m.d;
    q11 += m.b * m.b + m.d * m.d;
  }
  auto dot = [&](const IVec2& x, const IVec2& y) {
    return Int(x[0] * y[0] * q00 + (x[0] * y[1] + x[1] * y[0]) * q01 + x[1] * y[1] * q11);
  };
  IVec2 b1{Int(1), Int(0)}, b2{Int(0), Int(1)};
  for (;;) {
    if (dot(b1, b1) > dot(b2, b2))
      std::swap(b1, b2);
    Rational mu(dot(b1, b2), dot(b1, b1));
    mu.canonicalize();
    // nearest integer
    Int m = floor_of(mu + Rational(1, 2));
    if (m == 0)
      break;
    b2 = IVec2{Int(b2[0] - m * b1[0]), Int(b2[1] - m * b1[1])};
  }
  return Mat2{b1[0], b2[0], b1[1], b2[1]};
}

std::vector<Tri> grid(GridStyle s, int N, long S) {
  long u = S / N, h = u / 2;
  std::vector<Tri> out;
  for (long i = 0; i < N; ++i)
    for (long j = 0; j < N; ++j) {
      Pt p00{i * u, j * u}, p10{i * u + u, j * u}, p11{i * u + u, j * u + u},
          p01{i * u, j * u + u}, c{i * u + h, j * u + h};
      switch (s) {
        case GridStyle::Square4:
          out.push_back({p00, p10, c});
          out.push_back({p10, p11, c});
          out.push_back({p11, p01, c});
          out.push_back({p01, p00, c});
          break;
        case GridStyle::TriPlus:
          out.push_back({p00, p10, p11});
          out.push_back({p00, p11, p01});
          break;
        case GridStyle::TriMinus:
          out.push_back({p00, p10, p01});
          out.push_back({p10, p11, p01});
          break;
      }
    }
  return out;
}

std::vector<Tri> subdivide(const std::vector<Tri>& tris) {
  std::vector<Tri> out;
  out.reserve(tris.size() * 6);
  auto mid = [](const Pt& a, const Pt& b) {
    if ((a[0] + b[0]) % 2 || (a[1] + b[1]) % 2)
      throw ResolutionError("grid scale too coarse for subdivision");
    return Pt{(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
  };
  for (const Tri& t : tris) {
    long sx = t[0][0] + t[1][0] + t[2][0], sy = t[0][1] + t[1][1] + t[2][1];
    if (sx % 3 || sy % 3)
      throw ResolutionError("grid scale too coarse for subdivision");
    Pt g{sx / 3, sy / 3};
    for (int k = 0; k < 3; ++k) {
      const Pt& a = t[k];
      const Pt& b = t[(k + 1) % 3];
      Pt m = mid(a, b);
      out.push_back({a, m, g});
      out.push_back({b, m, g});
    }
  }
  return out;
}

long mod(long x, long S) {
  long r = x % S;
  return r < 0 ? r + S : r;
}

SimplicialComplex assemble(const std::vector<Tri>& tris, long S) {
  SimplicialComplex sc;
  sc.scale = S;
  std::vector<Pt> pts;
  pts.reserve(tris.size() * 3);
  for (auto& t : tris)
    for (auto& p : t)
      pts.push_back(Pt{mod(p[0], S), mod(p[1], S)});
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  sc.vertices = pts;
  auto id = [&](const Pt& p) {
    Pt q{mod(p[0], S), mod(p[1], S)};
    return int(std::lower_bound(pts.begin(), pts.end(), q) - pts.begin());
  };
  for (auto& t : tris) {
    std::array<int, 3> v{id(t[0]), id(t[1]), id(t[2])};
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2])
      throw ResolutionError("degenerate simplex: grid too coarse");
    sc.triangles.push_back(v);
    sc.edges.push_back({v[0], v[1]});
    sc.edges.push_back({v[0], v[2]});
    sc.edges.push_back({v[1], v[2]});
  }
  std::sort(sc.triangles.begin(), sc.triangles.end());
  if (std::adjacent_find(sc.triangles.begin(), sc.triangles.end()) != sc.triangles.end())
    throw ResolutionError("repeated simplex: grid too coarse");
  std::sort(sc.edges.begin(), sc.edges.end());
  sc.edges.erase(std::unique(sc.edges.begin(), sc.edges.end()), sc.edges.end());
  return sc;
}

VertexAction vertex_action(const SimplicialComplex& sc,
                           const std::vector<AffineIso>& els) {
  long S = sc.scale;
  VertexAction act;
  for (const AffineIso& g : els) {
    long a = g.lin.a.get_si(), b = g.lin.b.get_si(), c = g.lin.c.get_si(),
         d = g.lin.d.get_si();
    Rational tx = g.trans[0] * S, ty = g.trans[1] * S;
    if (!is_integer(tx) || !is_integer(ty))
      throw ResolutionError("translation not on the grid");
    long ux = tx.get_num().get_si(), uy = ty.get_num().get_si();
    std::vector<int> perm(sc.vertices.size());
    for (size_t v = 0; v < sc.vertices.size(); ++v) {
      auto& p = sc.vertices[v];
      Pt q{mod(a * p[0] + b * p[1] + ux, S), mod(c * p[0] + d * p[1] + uy, S)};
      auto it = std::lower_bound(sc.vertices.begin(), sc.vertices.end(), q);
      if (it == sc.vertices.end() || *it != q)
        throw ResolutionError("vertex image off the grid");
      perm[v] = int(it - sc.vertices.begin());
    }
    act.push_back(std::move(perm));
  }
  return act;
}

template <size_t K>
void check_simplices(const std::vector<std::array<int, K>>& simp, const VertexAction& act) {
  for (auto& perm : act)
    for (auto& s : simp) {
      std::array<int, K> t;
      for (size_t i = 0; i < K; ++i)
        t[i] = perm[s[i]];
      std::sort(t.begin(), t.end());
      if (!std::binary_search(simp.begin(), simp.end(), t))
        throw ResolutionError("action is not simplicial on the grid");
    }
}

template <size_t K>
bool regular(const std::vector<std::array<int, K>>& simp, const VertexAction& act) {
  for (auto& perm : act)
    for (auto& s : simp) {
      std::array<int, K> t;
      for (size_t i = 0; i < K; ++i)
        t[i] = perm[s[i]];
      std::array<int, K> sorted = t;
      std::sort(sorted.begin(), sorted.end());
      if (sorted == s && t != s)
        return false;
    }
  return true;
}

} // namespace

bool action_is_regular(const SimplicialComplex& sc, const VertexAction& action) {
  return regular(sc.edges, action) && regular(sc.triangles, action);
}

EquivariantTriangulation equivariant_triangulation(const GroupSpec& spec, int N) {
  if (N < 4 || N % 2)
    throw ResolutionError("grid resolution must be even and at least 4");
  std::vector<Mat2> bases{Mat2::identity(), reduced_basis(spec)};
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d)
          if (a * d - b * c == 1)
            bases.push_back(Mat2{a, b, c, d});
  for (const Mat2& B : bases)
    for (GridStyle style : {GridStyle::Square4, GridStyle::TriPlus, GridStyle::TriMinus}) {
      auto els = in_basis(spec, B);
      if (!std::all_of(els.begin(), els.end(), [&](const AffineIso& g) {
            return arrangement_invariant(style, g, N);
          }))
        continue;
      EquivariantTriangulation et;
      et.basis = B;
      et.style = style;
      et.N = N;
      long S = 72L * N;
      auto tris = grid(style, N, S);
      for (et.subdivisions = 1; et.subdivisions <= 2; ++et.subdivisions) {
        tris = subdivide(tris);
        et.complex = assemble(tris, S);
        et.action = vertex_action(et.complex, els);
        check_simplices(et.complex.edges, et.action);
        check_simplices(et.complex.triangles, et.action);
        if (action_is_regular(et.complex, et.action))
          return et;
      }
      throw ResolutionError("action not regular after 2 subdivisions; use a finer N");
    }
  throw ResolutionError("no invariant grid found for " + spec.name);
}

namespace {

int parity(const int* v, int n) {
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (v[i] > v[j])
        ++inv;
  return inv % 2 ? -1 : 1;
}

template <size_t K>
void orbits(const std::vector<std::array<int, K>>& simp, const VertexAction& act,
            std::vector<int>& orbit, std::vector<int>& eps, std::vector<int>& reps) {
  orbit.assign(simp.size(), -1);
  eps.assign(simp.size(), 0);
  for (size_t i = 0; i < simp.size(); ++i) {
    if (orbit[i] >= 0)
      continue;
    int o = int(reps.size());
    reps.push_back(int(i));
    for (auto& perm : act) {
      std::array<int, K> t;
      for (size_t k = 0; k < K; ++k)
        t[k] = perm[simp[i][k]];
      int sign = parity(t.data(), int(K));
      std::sort(t.begin(), t.end());
      size_t j = std::lower_bound(simp.begin(), simp.end(), t) - simp.begin();
      if (orbit[j] < 0) {
        orbit[j] = o;
        eps[j] = sign;
      } else if (orbit[j] != o || eps[j] != sign) {
        throw Error("quotient_complex: action is not regular");
      }
    }
  }
}

} // namespace

OrbitComplex quotient_complex(const SimplicialComplex& sc, const VertexAction& action) {
  std::vector<int> vorbit(sc.vertices.size(), -1);
  int nv = 0;
  for (size_t v = 0; v < sc.vertices.size(); ++v)
    if (vorbit[v] < 0) {
      for (auto& perm : action)
        vorbit[perm[v]] = nv;
      ++nv;
    }
  std::vector<int> eorbit, eeps, ereps, torbit, teps, treps;
  orbits(sc.edges, action, eorbit, eeps, ereps);
  orbits(sc.triangles, action, torbit, teps, treps);

  OrbitComplex oc;
  ChainComplex& cc = oc.chain;
  cc.cells = {size_t(nv), ereps.size(), treps.size()};
  cc.boundary[1].resize(ereps.size());
  oc.edge_vertices.resize(ereps.size());
  for (size_t o = 0; o < ereps.size(); ++o) {
    auto& e = sc.edges[ereps[o]];
    int a = vorbit[e[0]], b = vorbit[e[1]];
    oc.edge_vertices[o] = {a, b};
    if (a != b)
      cc.boundary[1][o] = {{std::min(a, b), a < b ? -1 : 1},
                           {std::max(a, b), a < b ? 1 : -1}};
  }
  cc.boundary[2].resize(treps.size());
  oc.edge_incidence.assign(ereps.size(), 0);
  for (size_t o = 0; o < treps.size(); ++o) {
    auto& t = sc.triangles[treps[o]];
    std::map<int, long> sum;
    std::array<std::array<int, 2>, 3> faces{{{t[1], t[2]}, {t[0], t[2]}, {t[0], t[1]}}};
    for (int i = 0; i < 3; ++i) {
      size_t j = std::lower_bound(sc.edges.begin(), sc.edges.end(), faces[i]) -
                 sc.edges.begin();
      int sign = (i % 2 ? -1 : 1) * eeps[j];
      sum[eorbit[j]] += sign;
      ++oc.edge_incidence[eorbit[j]];
    }
    for (auto& [f, c] : sum)
      if (c != 0)
        cc.boundary[2][o].push_back({f, c});
  }
  return oc;
}

} // namespace kcrystal
