#include "kcrystal/quotient.hpp"

#include <algorithm>
#include <numeric>

namespace kcrystal {

std::string QuotientSpace::description() const {
  if (surface)
    return surface->name;
  std::vector<std::string> parts;
  auto add = [&](int n, const char* one, const char* many) {
    if (n == 1)
      parts.push_back(one);
    else if (n > 1)
      parts.push_back(std::to_string(n) + " " + many);
  };
  add(points, "point", "points");
  add(intervals, "interval", "intervals");
  add(circles, "circle", "circles");
  if (parts.empty())
    return "empty";
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i)
    s += (i ? ", " : "") + parts[i];
  return s;
}

int QuotientSpace::euler() const {
  if (surface)
    return surface->euler;
  return points + intervals;
}

std::string surface_name(int chi, int b, bool orientable) {
  if (b == 0) {
    if (orientable && chi == 2) return "sphere";
    if (orientable && chi == 0) return "torus";
    if (!orientable && chi == 1) return "projective plane";
    if (!orientable && chi == 0) return "Klein bottle";
  } else {
    if (orientable && chi == 1 && b == 1) return "disk";
    if (orientable && chi == 0 && b == 2) return "annulus";
    if (!orientable && chi == 0 && b == 1) return "Möbius band";
  }
  return "surface(chi=" + std::to_string(chi) + ",b=" + std::to_string(b) +
         (orientable ? ",orientable)" : ",nonorientable)");
}

namespace {

void fill_homology(QuotientSpace& q) {
  q.homology.assign(3, FinAbGroup());
  q.homology[0].free_rank = q.points + q.intervals + q.circles;
  q.homology[1].free_rank = q.circles;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x)
    x = parent[x] = parent[parent[x]];
  return x;
}

} // namespace

QuotientSpace quotient_points(const FixedSet& fs, const Centralizer& c) {
  QuotientSpace q;
  if (fs.space == Mode::Plane) {
    q.points = int(fs.points.size());
  } else {
    std::vector<bool> seen(fs.points.size(), false);
    for (size_t i = 0; i < fs.points.size(); ++i) {
      if (seen[i])
        continue;
      ++q.points;
      for (auto& h : c.finite_parts) {
        Vec2 img = frac(h.apply(fs.points[i]));
        auto it = std::find(fs.points.begin(), fs.points.end(), img);
        if (it == fs.points.end())
          fail("centralizer does not preserve the fixed points");
        seen[it - fs.points.begin()] = true;
      }
    }
  }
  fill_homology(q);
  return q;
}

QuotientSpace quotient_1d(const FixedSet& fs, const Centralizer& c) {
  QuotientSpace q;
  auto reverses = [](const AffineIso& h, const IVec2& dir) {
    IVec2 img = h.lin * dir;
    return img[0] == -dir[0] && img[1] == -dir[1];
  };
  if (fs.space == Mode::Plane) {
    const IVec2& dir = fs.lines.at(0).dir;
    bool flip = false;
    for (auto& h : c.finite_parts) {
      IVec2 img = h.lin * dir;
      if (img != dir && !reverses(h, dir))
        fail("centralizer does not preserve the fixed line");
      flip = flip || reverses(h, dir);
    }
    (flip ? q.intervals : q.circles) = 1;
  } else {
    std::vector<bool> seen(fs.lines.size(), false);
    for (size_t i = 0; i < fs.lines.size(); ++i) {
      if (seen[i])
        continue;
      bool flip = false;
      for (auto& h : c.finite_parts) {
        Circle img = make_circle(h.apply(fs.lines[i].base), h.lin * fs.lines[i].dir);
        auto it = std::find(fs.lines.begin(), fs.lines.end(), img);
        if (it == fs.lines.end())
          fail("centralizer does not preserve the fixed circles");
        seen[it - fs.lines.begin()] = true;
        if (size_t(it - fs.lines.begin()) == i && reverses(h, fs.lines[i].dir))
          flip = true;
      }
      (flip ? q.intervals : q.circles) += 1;
    }
  }
  fill_homology(q);
  return q;
}

Surface classify_surface(const OrbitComplex& oc) {
  const ChainComplex& cc = oc.chain;
  Surface s;
  s.cells = cc.cells;
  s.euler = cc.euler_characteristic();
  s.homology = homology_of(cc);
  // boundary edges carry one 2-cell face
  std::vector<char> bedge(cc.cells[1], 0), bvert(cc.cells[0], 0);
  std::vector<int> parent(cc.cells[0]);
  std::iota(parent.begin(), parent.end(), 0);
  for (size_t e = 0; e < cc.cells[1]; ++e) {
    if (oc.edge_incidence[e] > 2)
      throw MalformedComplex("orbit complex is not a surface");
    if (oc.edge_incidence[e] != 1)
      continue;
    bedge[e] = 1;
    auto [a, b] = oc.edge_vertices[e];
    bvert[a] = bvert[b] = 1;
    parent[find_root(parent, a)] = find_root(parent, b);
  }
  std::vector<int> comp;
  for (size_t v = 0; v < cc.cells[0]; ++v)
    if (bvert[v])
      comp.push_back(find_root(parent, int(v)));
  std::sort(comp.begin(), comp.end());
  s.boundary_components = int(std::unique(comp.begin(), comp.end()) - comp.begin());
  // orientable iff H_2(S, dS) = Z
  ChainComplex rel;
  std::array<std::vector<int>, 2> newid;
  newid[0].assign(cc.cells[0], -1);
  newid[1].assign(cc.cells[1], -1);
  for (size_t v = 0; v < cc.cells[0]; ++v)
    if (!bvert[v])
      newid[0][v] = int(rel.cells[0]++);
  for (size_t e = 0; e < cc.cells[1]; ++e)
    if (!bedge[e])
      newid[1][e] = int(rel.cells[1]++);
  rel.cells[2] = cc.cells[2];
  rel.boundary[1].resize(rel.cells[1]);
  for (size_t e = 0; e < cc.cells[1]; ++e)
    if (newid[1][e] >= 0)
      for (auto& [v, c] : cc.boundary[1][e])
        if (newid[0][v] >= 0)
          rel.boundary[1][newid[1][e]].push_back({newid[0][v], c});
  rel.boundary[2].resize(rel.cells[2]);
  for (size_t t = 0; t < cc.cells[2]; ++t)
    for (auto& [e, c] : cc.boundary[2][t])
      if (newid[1][e] >= 0)
        rel.boundary[2][t].push_back({newid[1][e], c});
  auto relh = homology_of(rel);
  s.orientable = relh[2].free_rank == 1;
  s.name = surface_name(s.euler, s.boundary_components, s.orientable);
  return s;
}

QuotientSpace quotient_surface(const GroupSpec& spec, int N) {
  EquivariantTriangulation et = equivariant_triangulation(spec, N);
  OrbitComplex oc = quotient_complex(et.complex, et.action);
  QuotientSpace q;
  q.surface = classify_surface(oc);
  q.homology = q.surface->homology;
  return q;
}

QuotientSpace quotient_of(const GroupSpec& spec, const FixedSet& fs, const Centralizer& c,
                          int N) {
  switch (fs.kind) {
    case FixedSet::Kind::Empty: {
      QuotientSpace q;
      fill_homology(q);
      return q;
    }
    case FixedSet::Kind::Points: return quotient_points(fs, c);
    case FixedSet::Kind::Lines: return quotient_1d(fs, c);
    case FixedSet::Kind::All: return quotient_surface(spec, N);
  }
  fail("quotient_of: bad fixed set");
}

} // namespace kcrystal
