#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vtypes/algebraic.hpp"
#include "vtypes/graph.hpp"
#include "vtypes/polynomial.hpp"
#include "vtypes/spectrum.hpp"

namespace vtypes {

enum class VertexType { Downer, Neutral, Parter };
std::string_view type_name(VertexType t);

enum class Route { Exact, Numeric, BothAgree };
std::string_view route_name(Route r);

/// An eigenvalue as used for classification: exact when a minimal polynomial
/// is known, otherwise only a floating value.
struct Eigenvalue {
  std::optional<AlgebraicNumber> exact;
  double approx = 0.0;

  static Eigenvalue of(const AlgebraicNumber& a) { return {a, a.approx()}; }
  static Eigenvalue numeric(double v) { return {std::nullopt, v}; }
  std::string describe() const;
};

struct CellVerdict {
  CellTag tag;
  std::optional<VertexType> type;  // unset when members disagree
};

struct VertexTypeReport {
  Eigenvalue eigenvalue;
  std::size_t multiplicity = 0;         // k = mult(lambda, G)
  std::vector<VertexType> per_vertex;
  std::vector<CellVerdict> per_cell;
  Route route = Route::Numeric;
  std::optional<std::pair<double, double>> isolation;  // set when an unidentified lambda was isolated exactly
  std::vector<std::string> anomalies;
  double tolerance = 0.0;               // cluster tolerance used by the numeric route

  std::vector<Vertex> vertices_of(VertexType t) const;
  std::optional<VertexType> cell_type(CellTag tag) const;
};

struct ClassifierOptions {
  SpectrumOptions spectrum;
  double coordinate_tolerance = kDefaultCoordinateTolerance;
  /// Decide multiplicities of an eigenvalue without a known minimal polynomial
  /// exactly, from an isolating interval for it as a root of char_poly(G).
  bool isolate_roots = true;
};

/// Rational interval in which the squarefree part of char_poly(G) has exactly one root.
struct Isolation {
  Rational lo, hi;
};

/// Per-graph cache of char polys and spectra of G and of every G - v.
/// Vertex-deleted data is computed lazily; a Classifier may be shared by
/// threads (the caches are internally locked).
class Classifier {
 public:
  explicit Classifier(Graph g, ClassifierOptions opts = {});
  Classifier(const Classifier&) = delete;
  Classifier& operator=(const Classifier&) = delete;

  const Graph& graph() const { return graph_; }
  const Spectrum& spectrum() const { return spectrum_; }
  const IntPolynomial& char_poly() const;
  const ClassifierOptions& options() const { return opts_; }

  const IntPolynomial& char_poly_without(Vertex v) const;
  const Spectrum& spectrum_without(Vertex v) const;

  /// Squarefree part of char_poly(G).
  const IntPolynomial& squarefree_char_poly() const;
  /// Isolating interval for the cluster near `value`, or nullopt if Sturm does not confirm one.
  std::optional<Isolation> isolate(double value) const;

  /// Exact when lambda has a minimal polynomial or can be isolated, numeric otherwise.
  std::size_t multiplicity(const Eigenvalue& lambda) const;
  std::size_t multiplicity_without(Vertex v, const Eigenvalue& lambda) const;
  std::optional<std::size_t> exact_multiplicity(const Eigenvalue& lambda) const;
  std::optional<std::size_t> exact_multiplicity_without(Vertex v, const Eigenvalue& lambda) const;
  /// Eigenvalues of G - v within the host cluster tolerance of lambda.
  std::size_t numeric_multiplicity_without(Vertex v, double lambda) const;

  /// Exact route when lambda carries a minimal polynomial, numeric otherwise.
  /// Throws NotAnEigenvalue when mult(lambda, G) = 0.
  VertexType classify_vertex(const Eigenvalue& lambda, Vertex v) const;
  VertexTypeReport classify_all(const Eigenvalue& lambda) const;

  /// v is a downer iff its row of an orthonormal eigenspace basis has norm > tol.
  std::vector<Vertex> downers_via_eigenspace(const Cluster& c) const;
  /// Eigenspace downer set equals the multiplicity-difference downer set.
  bool cross_validate(const Eigenvalue& lambda) const;

  /// Matches a numeric eigenvalue to a minimal polynomial: an integer, one of
  /// the candidates, or a rational quadratic pairing it with another
  /// eigenvalue. Each match is confirmed by exact division of char_poly.
  std::optional<AlgebraicNumber> identify(double value, std::span<const IntPolynomial> candidates = {}) const;
  /// lambda_i (1-based, descending), identified where possible.
  Eigenvalue eigenvalue_at(std::size_t i, std::span<const IntPolynomial> candidates = {}) const;

 private:
  struct Deleted {
    std::once_flag poly_once, spec_once;
    IntPolynomial poly;
    Spectrum spectrum;
  };

  Graph graph_;
  ClassifierOptions opts_;
  Spectrum spectrum_;
  mutable std::once_flag poly_once_, sf_once_;
  mutable IntPolynomial poly_, sf_;
  mutable std::mutex iso_mutex_;
  mutable std::map<std::size_t, std::optional<Isolation>> isolations_;  // keyed by cluster start
  std::vector<std::unique_ptr<Deleted>> deleted_;
};

// Free-function forms; each builds a throwaway Classifier.
VertexType classify_vertex(const Graph& g, const Eigenvalue& lambda, Vertex v);
VertexTypeReport classify_all(const Graph& g, const Eigenvalue& lambda);
std::vector<Vertex> downers_via_eigenspace(const Spectrum& s, const Cluster& c,
                                           double tol = kDefaultCoordinateTolerance);
bool cross_validate(const Graph& g, const Eigenvalue& lambda);

}  // namespace vtypes
