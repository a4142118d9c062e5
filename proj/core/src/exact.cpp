#include "vtypes/exact.hpp"

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "vtypes/error.hpp"

namespace vtypes {

IntMatrix adjacency_matrix(const Graph& g) {
  const auto n = g.order();
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.adjacent(i, j)) a(i, j) = 1;
  return a;
}

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic for all 64-bit n
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

const std::vector<u64>& crt_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    for (u64 c = (1ULL << 62) - 1; out.size() < 128; c -= 2)
      if (is_prime_u64(c)) out.push_back(c);
    return out;
  }();
  return primes;
}

// Coefficient of x^(n-k) is (-1)^k times the sum of the k x k principal
// minors; Hadamard bounds each minor by the product of its row norms.
double coefficient_bound_bits(const IntMatrix& a) {
  const auto n = a.rows();
  double max_row_norm_sq = 1.0;
  double max_entry_sq = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double v = abs(a(i, j)).convert_to<double>();
      s += v * v;
      max_entry_sq = std::max(max_entry_sq, v * v);
    }
    max_row_norm_sq = std::max(max_row_norm_sq, s);
  }
  double best = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double log_binom =
        (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / std::log(2.0);
    // a row of a k x k submatrix is no longer than the full row, nor than sqrt(k) * max entry
    const double row_sq = std::min(max_row_norm_sq, static_cast<double>(k) * max_entry_sq);
    best = std::max(best, log_binom + 0.5 * static_cast<double>(k) * std::log2(row_sq));
  }
  return best;
}

std::vector<u64> char_poly_mod(const IntMatrix& a, u64 p) {
  const auto n = a.rows();
  std::vector<u64> h(n * n);
  auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };
  const BigInt bp = p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt r = a(i, j) % bp;
      if (r < 0) r += bp;
      at(i, j) = r.convert_to<u64>();
    }

  // similarity reduction to upper Hessenberg form
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && at(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(piv, c), at(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, piv), at(r, j + 1));
    }
    const u64 inv = invmod(at(j + 1, j), p);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (at(i, j) == 0) continue;
      const u64 u = mulmod(at(i, j), inv, p);
      for (std::size_t c = 0; c < n; ++c) at(i, c) = (at(i, c) + p - mulmod(u, at(j + 1, c), p)) % p;
      for (std::size_t r = 0; r < n; ++r) at(r, j + 1) = (at(r, j + 1) + mulmod(u, at(r, i), p)) % p;
    }
  }

  // polys[m] = char poly of the leading m x m block, constant term first
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<u64> cur(m + 1, 0);
    const auto& prev = polys[m - 1];
    const u64 d = at(m - 1, m - 1);
    for (std::size_t k = 0; k < prev.size(); ++k) {
      cur[k + 1] = (cur[k + 1] + prev[k]) % p;
      cur[k] = (cur[k] + p - mulmod(d, prev[k], p)) % p;
    }
    u64 t = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      t = mulmod(t, at(i + 1, i), p);
      const u64 coef = mulmod(t, at(i, m - 1), p);
      if (coef == 0) continue;
      for (std::size_t k = 0; k < polys[i].size(); ++k)
        cur[k] = (cur[k] + p - mulmod(coef, polys[i][k], p)) % p;
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

}  // namespace

IntPolynomial char_poly(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("char_poly needs a square matrix");
  const auto n = a.rows();
  if (n == 0) return IntPolynomial{1};

  const double need_bits = coefficient_bound_bits(a) + 2.0;  // sign + margin
  const auto& primes = crt_primes();
  std::vector<BigInt> value(n + 1, BigInt{0});
  BigInt modulus = 1;
  double have_bits = 0.0;
  std::size_t used = 0;
  while (have_bits < need_bits) {
    if (used == primes.size()) throw DomainError("char_poly: matrix too large for the prime table");
    const u64 p = primes[used++];
    const auto residues = char_poly_mod(a, p);
    const BigInt bp = p;
    BigInt mod_p = modulus % bp;
    const u64 inv = invmod(mod_p.convert_to<u64>(), p);
    for (std::size_t k = 0; k <= n; ++k) {
      // Garner step: value += modulus * ((r - value) * modulus^-1 mod p)
      BigInt cur = value[k] % bp;
      u64 diff = (residues[k] + p - cur.convert_to<u64>()) % p;
      value[k] += modulus * BigInt(mulmod(diff, inv, p));
    }
    modulus *= bp;
    have_bits += std::log2(static_cast<double>(p));
  }
  const BigInt half = modulus / 2;
  for (auto& c : value)
    if (c > half) c -= modulus;
  return IntPolynomial(std::move(value));
}

IntPolynomial char_poly(const Graph& g) { return char_poly(adjacency_matrix(g)); }

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant needs a square matrix");
  const auto n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : BigInt(-m(n - 1, n - 1));
}

std::size_t integer_rank(const IntMatrix& a) {
  IntMatrix m = a;
  const auto rows = m.rows();
  const auto cols = m.cols();
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(rank, j), m(piv, j));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m(i, j) = (m(i, j) * m(rank, c) - m(i, c) * m(rank, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

std::size_t rational_rank(const RationalMatrix& a) {
  IntMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) l = boost::multiprecision::lcm(l, denominator(a(i, j)));
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = numerator(a(i, j)) * (l / denominator(a(i, j)));
  }
  return integer_rank(m);
}

std::size_t root_multiplicity(const IntPolynomial& p, const IntPolynomial& monic_factor) {
  if (p.is_zero()) throw DomainError("root multiplicity in the zero polynomial is undefined");
  if (!monic_factor.is_monic() || monic_factor.degree() < 1) {
    throw DomainError("minimal polynomial must be monic of degree >= 1: " + monic_factor.to_string());
  }
  std::size_t k = 0;
  IntPolynomial cur = p;
  while (cur.degree() >= monic_factor.degree()) {
    auto [q, r] = divide_monic(cur, monic_factor);
    if (!r.is_zero()) break;
    cur = std::move(q);
    ++k;
  }
  return k;
}

std::size_t root_multiplicity(const IntPolynomial& p, const AlgebraicNumber& lambda) {
  return root_multiplicity(p, lambda.minpoly());
}

std::size_t eigenvalue_multiplicity(const Graph& g, const AlgebraicNumber& lambda) {
  return root_multiplicity(char_poly(g), lambda);
}

namespace {

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  const auto n = x.rows();
  IntMatrix out(n, y.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) out(i, j) += x(i, k) * y(k, j);
    }
  return out;
}

}  // namespace

std::size_t eigenspace_dimension(const Graph& g, const AlgebraicNumber& lambda) {
  const auto n = g.order();
  const IntMatrix a = adjacency_matrix(g);
  const auto& c = lambda.minpoly().coefficients();
  // Horner: q(A) = (...(A + c_{d-1} I) A + ...) + c_0 I
  IntMatrix acc = IntMatrix::identity(n);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc = multiply(acc, a);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[k];
  }
  const auto nullity = n - integer_rank(acc);
  return nullity / static_cast<std::size_t>(lambda.degree());
}

bool is_main_exact(const Graph& g, const AlgebraicNumber& lambda) {
  auto k = lambda.as_integer();
  if (!k) throw DomainError("exact mainness needs a rational eigenvalue, got " + lambda.describe());
  const auto n = g.order();
  IntMatrix m = adjacency_matrix(g);
  for (std::size_t i = 0; i < n; ++i) m(i, i) -= *k;
  const auto r = integer_rank(m);
  if (r == n) throw NotAnEigenvalue(lambda.describe() + " is not an eigenvalue");
  IntMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = 1;
  }
  return integer_rank(aug) == r + 1;
}

}  // namespace vtypes
