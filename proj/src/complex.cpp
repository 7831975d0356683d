#include "kcrystal/complex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

namespace kcrystal {

IntMat boundary_matrix(const ChainComplex& cc, int k) {
  IntMat m(cc.cells[k - 1], cc.cells[k]);
  for (size_t j = 0; j < cc.cells[k]; ++j)
    for (auto& [f, c] : cc.boundary[k][j])
      m.at(f, j) += c;
  return m;
}

void check_complex(const ChainComplex& cc) {
  for (int k = 1; k <= 2; ++k) {
    if (cc.boundary[k].size() != cc.cells[k])
      throw MalformedComplex("boundary list size mismatch in degree " +
                             std::to_string(k));
    for (auto& ch : cc.boundary[k])
      for (auto& [f, c] : ch)
        if (f < 0 || size_t(f) >= cc.cells[k - 1])
          throw MalformedComplex("face index out of range in degree " +
                                 std::to_string(k));
  }
  for (size_t t = 0; t < cc.cells[2]; ++t) {
    std::map<int, long> sum;
    for (auto& [e, c] : cc.boundary[2][t])
      for (auto& [v, d] : cc.boundary[1][e])
        sum[v] += c * d;
    for (auto& [v, s] : sum)
      if (s != 0)
        throw MalformedComplex("boundary of boundary is not zero at 2-cell " +
                               std::to_string(t));
  }
}

std::vector<FinAbGroup> homology_dense(const ChainComplex& cc) {
  check_complex(cc);
  IntMat d0(0, cc.cells[0]);
  IntMat d1 = boundary_matrix(cc, 1), d2 = boundary_matrix(cc, 2);
  IntMat d3(cc.cells[2], 0);
  return {abgroup_from_matrices(d0, d1), abgroup_from_matrices(d1, d2),
          abgroup_from_matrices(d2, d3)};
}

namespace {

// Algebraic Morse-style reduction: repeatedly cancel a k-cell b against a
// face a with coefficient +-1.
struct Reducer {
  std::array<std::vector<std::map<int, Int>>, 3> bnd;
  std::array<std::vector<std::set<int>>, 3> cob;  // cob[k][a]: (k+1)-cells
  std::array<std::vector<char>, 3> alive;

  explicit Reducer(const ChainComplex& cc) {
    for (int k = 0; k < 3; ++k) {
      alive[k].assign(cc.cells[k], 1);
      cob[k].resize(cc.cells[k]);
      bnd[k].resize(cc.cells[k]);
    }
    for (int k = 1; k < 3; ++k)
      for (size_t i = 0; i < cc.cells[k]; ++i)
        for (auto& [f, c] : cc.boundary[k][i]) {
          Int& slot = bnd[k][i][f];
          slot += c;
          if (slot == 0)
            bnd[k][i].erase(f);
        }
    for (int k = 1; k < 3; ++k)
      for (size_t i = 0; i < cc.cells[k]; ++i)
        for (auto& [f, c] : bnd[k][i])
          cob[k - 1][f].insert(int(i));
  }

  // cancel face a (dim k-1) against cell b (dim k)
  void eliminate(int k, int a, int b) {
    const Int beta = bnd[k][b].at(a);
    std::vector<int> others(cob[k - 1][a].begin(), cob[k - 1][a].end());
    for (int c : others) {
      if (c == b)
        continue;
      Int mu = bnd[k][c].at(a) * beta;  // beta = +-1
      for (auto& [f, x] : bnd[k][b]) {
        Int& slot = bnd[k][c][f];
        bool was_zero = slot == 0;
        slot -= mu * x;
        if (slot == 0) {
          bnd[k][c].erase(f);
          if (!was_zero)
            cob[k - 1][f].erase(c);
        } else if (was_zero) {
          cob[k - 1][f].insert(c);
        }
      }
    }
    for (auto& [f, x] : bnd[k][b])
      cob[k - 1][f].erase(b);
    bnd[k][b].clear();
    alive[k][b] = 0;
    if (k - 2 >= 0) {
      for (auto& [f, x] : bnd[k - 1][a])
        cob[k - 2][f].erase(a);
      bnd[k - 1][a].clear();
    }
    alive[k - 1][a] = 0;
    if (k + 1 < 3) {
      for (int z : cob[k][b])
        bnd[k + 1][z].erase(b);
      cob[k][b].clear();
    }
  }

  bool pass(int k) {
    using Item = std::pair<size_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    for (size_t a = 0; a < alive[k - 1].size(); ++a)
      if (alive[k - 1][a])
        heap.push({cob[k - 1][a].size(), int(a)});
    bool progress = false;
    while (!heap.empty()) {
      auto [s, a] = heap.top();
      heap.pop();
      if (!alive[k - 1][a])
        continue;
      if (s != cob[k - 1][a].size()) {
        heap.push({cob[k - 1][a].size(), a});
        continue;
      }
      int best = -1;
      for (int b : cob[k - 1][a]) {
        const Int& c = bnd[k][b].at(a);
        if ((c == 1 || c == -1) &&
            (best < 0 || bnd[k][b].size() < bnd[k][best].size()))
          best = b;
      }
      if (best < 0)
        continue;
      std::vector<int> touched;
      for (auto& [f, x] : bnd[k][best])
        if (f != a)
          touched.push_back(f);
      eliminate(k, a, best);
      progress = true;
      for (int f : touched)
        if (alive[k - 1][f])
          heap.push({cob[k - 1][f].size(), f});
    }
    return progress;
  }

  std::vector<FinAbGroup> finish() {
    while (pass(1)) {
    }
    while (pass(2)) {
    }
    std::array<std::vector<int>, 3> idx;
    std::array<std::unordered_map<int, size_t>, 3> pos;
    for (int k = 0; k < 3; ++k)
      for (size_t i = 0; i < alive[k].size(); ++i)
        if (alive[k][i]) {
          pos[k][int(i)] = idx[k].size();
          idx[k].push_back(int(i));
        }
    std::array<IntMat, 4> d;
    d[0] = IntMat(0, idx[0].size());
    d[3] = IntMat(idx[2].size(), 0);
    for (int k = 1; k < 3; ++k) {
      d[k] = IntMat(idx[k - 1].size(), idx[k].size());
      for (size_t j = 0; j < idx[k].size(); ++j)
        for (auto& [f, x] : bnd[k][idx[k][j]])
          d[k].at(pos[k - 1].at(f), j) = x;
    }
    return {abgroup_from_matrices(d[0], d[1]), abgroup_from_matrices(d[1], d[2]),
            abgroup_from_matrices(d[2], d[3])};
  }
};

} // namespace

std::vector<FinAbGroup> homology_of(const ChainComplex& cc) {
  check_complex(cc);
  Reducer r(cc);
  return r.finish();
}

std::string dump_cells(const ChainComplex& cc) {
  std::ostringstream os;
  for (int k = 0; k < 3; ++k)
    for (size_t i = 0; i < cc.cells[k]; ++i) {
      os << k << ' ' << i << " :";
      if (k > 0)
        for (auto& [f, c] : cc.boundary[k][i])
          os << ' ' << f << '*' << c;
      os << '\n';
    }
  return os.str();
}

ChainComplex SimplicialComplex::chain() const {
  ChainComplex cc;
  cc.cells = {vertices.size(), edges.size(), triangles.size()};
  std::map<std::array<int, 2>, int> edge_id;
  for (size_t i = 0; i < edges.size(); ++i)
    edge_id[edges[i]] = int(i);
  cc.boundary[1].resize(edges.size());
  for (size_t i = 0; i < edges.size(); ++i)
    cc.boundary[1][i] = {{edges[i][0], -1}, {edges[i][1], 1}};
  cc.boundary[2].resize(triangles.size());
  for (size_t i = 0; i < triangles.size(); ++i) {
    auto& t = triangles[i];
    // d[v0 v1 v2] = [v1 v2] - [v0 v2] + [v0 v1]
    cc.boundary[2][i] = {{edge_id.at({t[1], t[2]}), 1},
                         {edge_id.at({t[0], t[2]}), -1},
                         {edge_id.at({t[0], t[1]}), 1}};
  }
  return cc;
}

} // namespace kcrystal
