#include "vtypes/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "vtypes/error.hpp"

namespace vtypes {

double default_cluster_tolerance(double spectral_radius) {
  return 1e-7 * std::max(1.0, spectral_radius);
}

SymmetricEigen jacobi_eigen(DenseMatrix<double> a) {
  const auto n = a.rows();
  if (a.cols() != n) throw DomainError("jacobi_eigen needs a square matrix");
  SymmetricEigen out;
  out.vectors = DenseMatrix<double>::identity(n);
  double frob = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) frob += a(i, j) * a(i, j);
  frob = std::sqrt(frob);
  const double threshold = kJacobiOffDiagonalFactor * frob;

  auto& v = out.vectors;
  for (std::size_t sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= threshold) break;
    ++out.sweeps;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 0.1 * threshold) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i);
  return out;
}

Spectrum::Spectrum(std::vector<EigenPair> pairs, double cluster_tolerance, double main_tolerance)
    : pairs_(std::move(pairs)), cluster_tol_(cluster_tolerance), main_tol_(main_tolerance) {
  std::size_t i = 0;
  while (i < pairs_.size()) {
    std::size_t j = i + 1;
    while (j < pairs_.size() && pairs_[j - 1].value - pairs_[j].value <= cluster_tol_) ++j;
    Cluster c;
    c.first = i;
    c.multiplicity = j - i;
    double sum = 0.0;
    for (std::size_t k = i; k < j; ++k) sum += pairs_[k].value;
    c.value = sum / static_cast<double>(c.multiplicity);
    clusters_.push_back(c);
    i = j;
  }
  for (auto& c : clusters_) c.main = is_main_numeric(*this, c, main_tol_);
}

std::vector<double> Spectrum::values() const {
  std::vector<double> out;
  out.reserve(pairs_.size());
  for (const auto& p : pairs_) out.push_back(p.value);
  return out;
}

double Spectrum::lambda(std::size_t i) const {
  if (i < 1 || i > pairs_.size()) {
    throw DomainError("eigenvalue index " + std::to_string(i) + " outside 1.." + std::to_string(pairs_.size()));
  }
  return pairs_[i - 1].value;
}

double Spectrum::spectral_radius() const {
  double r = 0.0;
  for (const auto& p : pairs_) r = std::max(r, std::abs(p.value));
  return r;
}

const Cluster* Spectrum::find(double value) const {
  const Cluster* best = nullptr;
  double best_gap = cluster_tol_;
  for (const auto& c : clusters_) {
    const double lo = pairs_[c.first + c.multiplicity - 1].value;
    const double hi = pairs_[c.first].value;
    const double gap = value < lo ? lo - value : (value > hi ? value - hi : 0.0);
    if (gap <= best_gap) {
      best = &c;
      best_gap = gap;
    }
  }
  return best;
}

const Cluster& Spectrum::cluster_of(std::size_t i) const {
  lambda(i);  // range check
  for (const auto& c : clusters_)
    if (i - 1 >= c.first && i - 1 < c.first + c.multiplicity) return c;
  throw DomainError("cluster lookup failed");
}

DenseMatrix<double> Spectrum::basis(const Cluster& c) const {
  const auto n = order();
  DenseMatrix<double> b(n, c.multiplicity);
  std::size_t kept = 0;
  for (std::size_t k = 0; k < c.multiplicity; ++k) {
    std::vector<double> w = pairs_[c.first + k].vector;
    // modified Gram-Schmidt, twice for stability
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t q = 0; q < kept; ++q) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += b(i, q) * w[i];
        for (std::size_t i = 0; i < n; ++i) w[i] -= dot * b(i, q);
      }
    double norm = 0.0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    if (norm < 1e-12) continue;
    for (std::size_t i = 0; i < n; ++i) b(i, kept) = w[i] / norm;
    ++kept;
  }
  if (kept != c.multiplicity) {
    DenseMatrix<double> trimmed(n, kept);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t q = 0; q < kept; ++q) trimmed(i, q) = b(i, q);
    return trimmed;
  }
  return b;
}

DenseMatrix<double> adjacency_as_double(const Graph& g) {
  const auto n = g.order();
  DenseMatrix<double> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = g.adjacent(i, j) ? 1.0 : 0.0;
  return a;
}

Spectrum eig_sym(const DenseMatrix<double>& symmetric, const SpectrumOptions& opts) {
  const auto n = symmetric.rows();
  SymmetricEigen e = jacobi_eigen(symmetric);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return e.values[x] > e.values[y]; });
  std::vector<EigenPair> pairs;
  pairs.reserve(n);
  double radius = 0.0;
  for (std::size_t k : order) {
    EigenPair p;
    p.value = e.values[k];
    p.vector.resize(n);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      p.vector[i] = e.vectors(i, k);
      norm += p.vector[i] * p.vector[i];
    }
    norm = std::sqrt(norm);
    for (auto& x : p.vector) x /= norm;
    radius = std::max(radius, std::abs(p.value));
    pairs.push_back(std::move(p));
  }
  const double tol = opts.cluster_tolerance.value_or(default_cluster_tolerance(radius));
  return Spectrum(std::move(pairs), tol, opts.main_tolerance);
}

Spectrum eig_sym(const Graph& g, const SpectrumOptions& opts) { return eig_sym(adjacency_as_double(g), opts); }

double sum_rule_residual(const Graph& g, double lambda, std::span<const double> x) {
  const auto n = g.order();
  if (x.size() != n) {
    throw DomainError("vector length " + std::to_string(x.size()) + " does not match order " + std::to_string(n));
  }
  double norm = 0.0;
  for (double v : x) norm += v * v;
  norm = std::sqrt(norm);
  if (norm == 0.0) throw DomainError("zero vector is not an eigenvector");
  double worst = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    double s = 0.0;
    for (std::size_t u = 0; u < n; ++u)
      if (g.adjacent(u, v)) s += x[u];
    worst = std::max(worst, std::abs(lambda * x[v] - s) / norm);
  }
  return worst;
}

bool verify_eigenvector(const Graph& g, double lambda, std::span<const double> x, double tol) {
  return sum_rule_residual(g, lambda, x) <= tol;
}

bool is_main_numeric(const Spectrum& s, const Cluster& c, double tol) {
  const auto n = s.order();
  if (n == 0) return false;
  const auto b = s.basis(c);
  double proj_sq = 0.0;
  for (std::size_t q = 0; q < b.cols(); ++q) {
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += b(i, q);
    proj_sq += dot * dot;
  }
  return std::sqrt(proj_sq) > tol * std::sqrt(static_cast<double>(n));
}

bool check_interlacing(const Spectrum& host, const Spectrum& sub, double slack) {
  const auto n = host.order();
  const auto m = sub.order();
  if (m >= n) throw DomainError("interlacing needs a strictly smaller induced subgraph");
  for (std::size_t i = 1; i <= m; ++i) {
    const double mid = sub.lambda(i);
    if (host.lambda(i) + slack < mid) return false;
    if (mid < host.lambda(n - m + i) - slack) return false;
  }
  return true;
}

bool check_interlacing(const Graph& host, const Graph& sub, std::optional<double> slack) {
  const auto hs = eig_sym(host);
  const auto ss = eig_sym(sub);
  return check_interlacing(hs, ss, slack.value_or(hs.cluster_tolerance()));
}

std::size_t numeric_multiplicity(const Spectrum& s, double lambda, std::optional<double> tol) {
  const double t = tol.value_or(s.cluster_tolerance());
  return static_cast<std::size_t>(std::count_if(s.pairs().begin(), s.pairs().end(),
                                                [&](const EigenPair& p) { return std::abs(p.value - lambda) <= t; }));
}

std::size_t numeric_multiplicity(const Graph& g, double lambda) { return numeric_multiplicity(eig_sym(g), lambda); }

}  // namespace vtypes
