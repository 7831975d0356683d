#include "kcrystal/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace kcrystal {

Int floor_of(const Rational& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational frac(const Rational& q) {
  Rational r = q - Rational(floor_of(q));
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view s) {
  std::string t(s);
  size_t slash = t.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(Int(t));
    Int num(t.substr(0, slash)), den(t.substr(slash + 1));
    if (den == 0)
      throw ParseError("zero denominator: " + t);
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: '" + t + "'");
  }
}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> init) {
  rows = init.size();
  cols = rows ? init.begin()->size() : 0;
  for (auto& row : init) {
    if (row.size() != cols)
      fail("IntMat: ragged initializer");
    for (long v : row)
      a.emplace_back(v);
  }
}

IntMat IntMat::identity(size_t n) {
  IntMat m(n, n);
  for (size_t i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

bool IntMat::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

IntMat IntMat::transposed() const {
  IntMat t(cols, rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      t.at(j, i) = at(i, j);
  return t;
}

IntMat operator*(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows)
    fail("IntMat product: dimension mismatch");
  IntMat r(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      const Int& v = x.at(i, k);
      if (v == 0)
        continue;
      for (size_t j = 0; j < y.cols; ++j)
        r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

// Bareiss fraction-free elimination
Int determinant(const IntMat& m) {
  if (m.rows != m.cols)
    fail("determinant of a non-square matrix");
  size_t n = m.rows;
  if (n == 0)
    return 1;
  IntMat w = m;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && w.at(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      for (size_t j = 0; j < n; ++j)
        std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Int v = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        w.at(i, j) = v;
      }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

std::string to_string(const IntMat& m) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < m.rows; ++i) {
    os << (i ? ",[" : "[");
    for (size_t j = 0; j < m.cols; ++j)
      os << (j ? "," : "") << m.at(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

struct SnfWork {
  IntMat D, U, V;

  void swap_rows(size_t i, size_t j) {
    if (i == j)
      return;
    for (size_t c = 0; c < D.cols; ++c)
      std::swap(D.at(i, c), D.at(j, c));
    for (size_t c = 0; c < U.cols; ++c)
      std::swap(U.at(i, c), U.at(j, c));
  }
  void swap_cols(size_t i, size_t j) {
    if (i == j)
      return;
    for (size_t r = 0; r < D.rows; ++r)
      std::swap(D.at(r, i), D.at(r, j));
    for (size_t r = 0; r < V.rows; ++r)
      std::swap(V.at(r, i), V.at(r, j));
  }
  // row i -= q * row j
  void sub_row(size_t i, size_t j, const Int& q) {
    for (size_t c = 0; c < D.cols; ++c)
      D.at(i, c) -= q * D.at(j, c);
    for (size_t c = 0; c < U.cols; ++c)
      U.at(i, c) -= q * U.at(j, c);
  }
  // col i -= q * col j
  void sub_col(size_t i, size_t j, const Int& q) {
    for (size_t r = 0; r < D.rows; ++r)
      D.at(r, i) -= q * D.at(r, j);
    for (size_t r = 0; r < V.rows; ++r)
      V.at(r, i) -= q * V.at(r, j);
  }
  void negate_row(size_t i) {
    for (size_t c = 0; c < D.cols; ++c)
      D.at(i, c) = -D.at(i, c);
    for (size_t c = 0; c < U.cols; ++c)
      U.at(i, c) = -U.at(i, c);
  }
};

} // namespace

Snf smith_normal_form(const IntMat& A) {
  SnfWork w{A, IntMat::identity(A.rows), IntMat::identity(A.cols)};
  size_t m = A.rows, n = A.cols;
  for (size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block
      size_t pi = m, pj = n;
      for (size_t i = t; i < m; ++i)
        for (size_t j = t; j < n; ++j) {
          const Int& v = w.D.at(i, j);
          if (v != 0 && (pi == m || abs(v) < abs(w.D.at(pi, pj)))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == m)
        goto done;
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
      const Int p = w.D.at(t, t);
      bool clean = true;
      for (size_t i = t + 1; i < m; ++i)
        if (w.D.at(i, t) != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), w.D.at(i, t).get_mpz_t(), p.get_mpz_t());
          w.sub_row(i, t, q);
          if (w.D.at(i, t) != 0)
            clean = false;
        }
      for (size_t j = t + 1; j < n; ++j)
        if (w.D.at(t, j) != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), w.D.at(t, j).get_mpz_t(), p.get_mpz_t());
          w.sub_col(j, t, q);
          if (w.D.at(t, j) != 0)
            clean = false;
        }
      if (!clean)
        continue;
      // divisibility of the remaining block
      size_t bad = m;
      for (size_t i = t + 1; i < m && bad == m; ++i)
        for (size_t j = t + 1; j < n; ++j)
          if (w.D.at(i, j) % p != 0) {
            bad = i;
            break;
          }
      if (bad == m)
        break;
      w.sub_row(t, bad, -1);  // row t += row bad
    }
    if (w.D.at(t, t) < 0)
      w.negate_row(t);
  }
done:
  return Snf{std::move(w.U), std::move(w.D), std::move(w.V)};
}

std::vector<Int> invariant_factors(const IntMat& A) {
  Snf s = smith_normal_form(A);
  std::vector<Int> r;
  for (size_t i = 0; i < std::min(A.rows, A.cols); ++i)
    if (s.D.at(i, i) != 0)
      r.push_back(s.D.at(i, i));
  return r;
}

size_t rank_of(const IntMat& A) { return invariant_factors(A).size(); }

IntegerSolution solve_integer(const IntMat& A, const std::vector<Int>& b) {
  if (b.size() != A.rows)
    fail("solve_integer: dimension mismatch");
  Snf s = smith_normal_form(A);
  std::vector<Int> c(A.rows);
  for (size_t i = 0; i < A.rows; ++i)
    for (size_t k = 0; k < A.rows; ++k)
      c[i] += s.U.at(i, k) * b[k];
  IntegerSolution out;
  std::vector<Int> y(A.cols);
  for (size_t i = 0; i < A.rows; ++i) {
    Int d = i < A.cols ? s.D.at(i, i) : Int(0);
    if (d == 0) {
      if (c[i] != 0)
        return out;
    } else {
      if (c[i] % d != 0)
        return out;
      y[i] = c[i] / d;
    }
  }
  out.solvable = true;
  out.particular.assign(A.cols, Int(0));
  for (size_t i = 0; i < A.cols; ++i)
    for (size_t k = 0; k < A.cols; ++k)
      out.particular[i] += s.V.at(i, k) * y[k];
  for (size_t k = 0; k < A.cols; ++k)
    if (k >= A.rows || s.D.at(k, k) == 0) {
      std::vector<Int> v(A.cols);
      for (size_t i = 0; i < A.cols; ++i)
        v[i] = s.V.at(i, k);
      out.kernel.push_back(std::move(v));
    }
  return out;
}

FinAbGroup FinAbGroup::from_cyclic(const std::vector<Int>& orders) {
  FinAbGroup g;
  IntMat diag(orders.size(), orders.size());
  for (size_t i = 0; i < orders.size(); ++i)
    diag.at(i, i) = abs(orders[i]);
  for (const Int& d : invariant_factors(diag))
    if (d != 1)
      g.torsion.push_back(d);
  for (const Int& o : orders)
    if (o == 0)
      ++g.free_rank;
  return g;
}

FinAbGroup direct_sum(const FinAbGroup& x, const FinAbGroup& y) {
  if (y.torsion.empty()) {
    FinAbGroup g = x;
    g.free_rank += y.free_rank;
    return g;
  }
  std::vector<Int> orders = x.torsion;
  orders.insert(orders.end(), y.torsion.begin(), y.torsion.end());
  FinAbGroup g = FinAbGroup::from_cyclic(orders);
  g.free_rank = x.free_rank + y.free_rank;
  return g;
}

std::string to_string(const FinAbGroup& g) {
  std::string s;
  if (g.free_rank == 1)
    s = "Z";
  else if (g.free_rank > 1)
    s = "Z^" + std::to_string(g.free_rank);
  for (const Int& d : g.torsion)
    s += (s.empty() ? "Z/" : " + Z/") + d.get_str();
  return s.empty() ? "0" : s;
}

std::string to_display(const FinAbGroup& g) {
  static const char* sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s;
  if (g.free_rank == 1)
    s = "Z";
  else if (g.free_rank > 1)
    s = "Z^" + std::to_string(g.free_rank);
  for (const Int& d : g.torsion) {
    s += s.empty() ? "Z" : "⊕Z";
    for (char c : d.get_str())
      s += sub[c - '0'];
  }
  return s.empty() ? "0" : s;
}

FinAbGroup parse_abgroup(std::string_view text) {
  std::string s;
  // normalize separators and subscripts
  static const char* sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  for (size_t i = 0; i < text.size();) {
    if (text.compare(i, 3, "⊕") == 0) {
      s += '+';
      i += 3;
      continue;
    }
    bool matched = false;
    for (int d = 0; d < 10; ++d)
      if (text.compare(i, 3, sub[d]) == 0) {
        s += char('0' + d);
        i += 3;
        matched = true;
        break;
      }
    if (matched)
      continue;
    if (text[i] != ' ' && text[i] != '\t')
      s += text[i];
    ++i;
  }
  if (s.empty())
    throw ParseError("empty abelian group");
  if (s == "0")
    return FinAbGroup();
  int rank = 0;
  std::vector<Int> orders;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find('+', pos);
    std::string term = s.substr(pos, next == std::string::npos ? std::string::npos
                                                               : next - pos);
    if (term.empty() || term[0] != 'Z')
      throw ParseError("bad abelian group term '" + term + "' in '" +
                       std::string(text) + "'");
    std::string rest = term.substr(1);
    try {
      if (rest.empty()) {
        rank += 1;
      } else if (rest[0] == '^') {
        rank += std::stoi(rest.substr(1));
      } else {
        if (rest[0] == '/' || rest[0] == '_')
          rest = rest.substr(1);
        Int d(rest);
        if (d < 2)
          throw ParseError("bad cyclic order in '" + term + "'");
        orders.push_back(d);
      }
    } catch (const std::invalid_argument&) {
      throw ParseError("bad abelian group term '" + term + "'");
    }
    if (next == std::string::npos)
      break;
    pos = next + 1;
  }
  FinAbGroup g = FinAbGroup::from_cyclic(orders);
  g.free_rank = rank;
  return g;
}

FinAbGroup abgroup_from_matrices(const IntMat& out, const IntMat& in) {
  if (out.cols != in.rows)
    fail("abgroup_from_matrices: chain groups do not match");
  if (out.rows > 0 && in.cols > 0 && !(out * in).is_zero())
    throw MalformedComplex("boundary of boundary is not zero");
  size_t n = out.cols;
  size_t r_out = out.rows ? rank_of(out) : 0;
  std::vector<Int> f = in.cols ? invariant_factors(in) : std::vector<Int>{};
  FinAbGroup g;
  g.free_rank = int(n - r_out - f.size());
  for (const Int& d : f)
    if (d != 1)
      g.torsion.push_back(d);
  return g;
}

} // namespace kcrystal
