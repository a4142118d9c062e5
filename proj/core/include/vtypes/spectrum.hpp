#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vtypes/graph.hpp"
#include "vtypes/matrix.hpp"

namespace vtypes {

inline constexpr double kJacobiOffDiagonalFactor = 1e-12;
inline constexpr double kDefaultMainTolerance = 1e-7;
inline constexpr double kDefaultCoordinateTolerance = 1e-7;

/// tau_cluster = 1e-7 * max(1, spectral radius).
double default_cluster_tolerance(double spectral_radius);

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;  // unit norm, vertex-indexed
};

/// A maximal run of sorted eigenvalues that agree within the cluster tolerance.
struct Cluster {
  double value = 0.0;      // mean of the member values
  std::size_t first = 0;   // index into Spectrum::pairs()
  std::size_t multiplicity = 0;
  bool main = false;
};

/// Eigenpairs sorted by value descending (lambda_1 >= ... >= lambda_n), ties
/// by ascending solver index, grouped into clusters with a mainness flag each.
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(std::vector<EigenPair> pairs, double cluster_tolerance, double main_tolerance);

  std::size_t order() const { return pairs_.size(); }
  const std::vector<EigenPair>& pairs() const { return pairs_; }
  const std::vector<Cluster>& clusters() const { return clusters_; }
  std::vector<double> values() const;
  /// lambda_i with the 1-based convention; throws DomainError out of range.
  double lambda(std::size_t i) const;
  double cluster_tolerance() const { return cluster_tol_; }
  double main_tolerance() const { return main_tol_; }
  double spectral_radius() const;

  /// Cluster whose representative is within the cluster tolerance of `value`.
  const Cluster* find(double value) const;
  /// Cluster containing the 1-based position i.
  const Cluster& cluster_of(std::size_t i) const;
  /// Orthonormalized basis of the cluster's eigenspace, one column per member.
  DenseMatrix<double> basis(const Cluster& c) const;

 private:
  std::vector<EigenPair> pairs_;
  std::vector<Cluster> clusters_;
  double cluster_tol_ = 0.0;
  double main_tol_ = kDefaultMainTolerance;
};

struct SymmetricEigen {
  std::vector<double> values;     // solver order (unsorted)
  DenseMatrix<double> vectors;    // column k pairs with values[k]
  std::size_t sweeps = 0;
};

/// Cyclic Jacobi rotations until every off-diagonal magnitude is below
/// 1e-12 * ||A||_F. Works on a private copy.
SymmetricEigen jacobi_eigen(DenseMatrix<double> a);

struct SpectrumOptions {
  std::optional<double> cluster_tolerance;  // default_cluster_tolerance() when unset
  double main_tolerance = kDefaultMainTolerance;
};

DenseMatrix<double> adjacency_as_double(const Graph& g);
Spectrum eig_sym(const Graph& g, const SpectrumOptions& opts = {});
Spectrum eig_sym(const DenseMatrix<double>& symmetric, const SpectrumOptions& opts = {});

/// max_v |lambda x(v) - sum_{u~v} x(u)| after scaling x to unit norm.
/// Throws DomainError on a zero vector or a length mismatch.
double sum_rule_residual(const Graph& g, double lambda, std::span<const double> x);
bool verify_eigenvector(const Graph& g, double lambda, std::span<const double> x, double tol);

/// ||P j|| > tol * sqrt(n), P the projector onto the cluster eigenspace.
bool is_main_numeric(const Spectrum& s, const Cluster& c, double tol);

/// lambda_i + slack >= lambda'_i >= lambda_{n-n'+i} - slack for i = 1..n'.
/// Throws DomainError when the subgraph is not smaller.
bool check_interlacing(const Spectrum& host, const Spectrum& sub, double slack);
bool check_interlacing(const Graph& host, const Graph& sub, std::optional<double> slack = std::nullopt);

/// Number of eigenvalues within tol of lambda (tol defaults to the spectrum's cluster tolerance).
std::size_t numeric_multiplicity(const Spectrum& s, double lambda, std::optional<double> tol = std::nullopt);
std::size_t numeric_multiplicity(const Graph& g, double lambda);

}  // namespace vtypes
