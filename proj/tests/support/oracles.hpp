#pragma once

// Slow, obviously-correct reference computations. Nothing here calls into the
// library's exact or numeric machinery.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vtypes/graph.hpp"

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Matrix = std::vector<std::vector<Rational>>;

struct Cell {
  bool u;
  int index;
};

/// Vertex cells in U_1..U_h, V_1..V_h order, expanded from the cell sizes.
inline std::vector<Cell> cells_of(const vtypes::GraphSpec& s) {
  std::vector<Cell> out;
  for (std::size_t i = 0; i < s.h(); ++i)
    for (int k = 0; k < s.m[i]; ++k) out.push_back({true, static_cast<int>(i) + 1});
  for (std::size_t i = 0; i < s.h(); ++i)
    for (int k = 0; k < s.n[i]; ++k) out.push_back({false, static_cast<int>(i) + 1});
  return out;
}

/// Adjacency straight from the definitions of the two families.
inline std::vector<std::vector<int>> adjacency(const vtypes::GraphSpec& s) {
  const auto cells = cells_of(s);
  const int h = static_cast<int>(s.h());
  const std::size_t n = cells.size();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const Cell& p = cells[x];
      const Cell& q = cells[y];
      bool adj = false;
      if (p.u && !q.u) adj = s.family == vtypes::Family::Threshold ? q.index <= p.index : q.index <= h - p.index + 1;
      if (!p.u && q.u) adj = s.family == vtypes::Family::Threshold ? p.index <= q.index : p.index <= h - q.index + 1;
      if (!p.u && !q.u) adj = s.family == vtypes::Family::Threshold;
      a[x][y] = adj ? 1 : 0;
    }
  return a;
}

inline std::vector<std::vector<int>> adjacency(const vtypes::Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) a[x][y] = g.adjacent(x, y) ? 1 : 0;
  return a;
}

inline Matrix to_rational(const std::vector<std::vector<int>>& a) {
  Matrix m(a.size(), std::vector<Rational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = a[i][j];
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

/// Rank by plain Gaussian elimination over Q.
inline std::size_t rank(Matrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t nullity(const Matrix& m) { return m.size() - rank(m); }

/// q(A) for q given by coefficients, constant term first.
inline Matrix poly_of(const Matrix& a, const std::vector<long long>& q) {
  const std::size_t n = a.size();
  Matrix acc(n, std::vector<Rational>(n));
  for (auto it = q.rbegin(); it != q.rend(); ++it) {
    acc = multiply(acc, a);
    for (std::size_t i = 0; i < n; ++i) acc[i][i] += *it;
  }
  return acc;
}

/// Multiplicity of the roots of an irreducible q in a symmetric integer matrix:
/// nullity(q(A)) / deg q, since conjugate roots share multiplicity.
inline std::size_t multiplicity(const std::vector<std::vector<int>>& a, const std::vector<long long>& q) {
  if (a.empty()) return 0;
  return nullity(poly_of(to_rational(a), q)) / (q.size() - 1);
}

inline std::vector<std::vector<int>> delete_vertex(const std::vector<std::vector<int>>& a, std::size_t v) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == v) continue;
    std::vector<int> row;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != v) row.push_back(a[i][j]);
    out.push_back(row);
  }
  return out;
}

/// -1 downer, 0 neutral, +1 Parter: mult(G - v) - mult(G).
inline int type_delta(const std::vector<std::vector<int>>& a, const std::vector<long long>& q, std::size_t v) {
  return static_cast<int>(multiplicity(delete_vertex(a, v), q)) - static_cast<int>(multiplicity(a, q));
}

/// det(xI - A) by Faddeev-LeVerrier over Q; constant term first.
inline std::vector<BigInt> faddeev_leverrier(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  const Matrix A = to_rational(a);
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix m(n, std::vector<Rational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    m = multiply(A, m);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += m[i][i];
    c[n - k] = -tr / static_cast<long long>(k);
  }
  std::vector<BigInt> out;
  for (const auto& x : c) out.push_back(boost::multiprecision::numerator(x));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

/// det(tI - A) at a rational t by elimination with exact fractions.
inline Rational char_poly_at(const std::vector<std::vector<int>>& a, const Rational& t) {
  Matrix m = to_rational(a);
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? t : Rational(0)) - m[i][j];
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

/// j lies outside range(A - lambda I) for an integer lambda.
inline bool is_main(const std::vector<std::vector<int>>& a, long long lambda) {
  Matrix m = to_rational(a);
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= lambda;
  const std::size_t r = rank(m);
  for (auto& row : m) row.push_back(1);
  return rank(m) == r + 1;
}

/// Random specs for property tests: h in 1..max_h, each cell in 1..max_cell.
class SpecGen {
 public:
  explicit SpecGen(std::uint64_t seed) : rng_(seed) {}

  vtypes::GraphSpec operator()(vtypes::Family f, int max_h, int max_cell) {
    const int h = pick(1, max_h);
    vtypes::GraphSpec s;
    s.family = f;
    for (int i = 0; i < h; ++i) s.m.push_back(pick(1, max_cell));
    for (int i = 0; i < h; ++i) s.n.push_back(pick(1, max_cell));
    return s;
  }

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Erdos-Renyi graph on n vertices.
  std::vector<std::vector<int>> random_graph(std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) a[i][j] = a[j][i] = coin(rng_) ? 1 : 0;
    return a;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline vtypes::Graph to_graph(const std::vector<std::vector<int>>& a) {
  std::vector<std::pair<vtypes::Vertex, vtypes::Vertex>> edges;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i][j]) edges.emplace_back(i, j);
  return vtypes::Graph::from_edges(a.size(), edges);
}

}  // namespace oracle
