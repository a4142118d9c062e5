#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vtypes/algebraic.hpp"
#include "vtypes/graph.hpp"
#include "vtypes/spectrum.hpp"
#include "vtypes/vertex_types.hpp"

namespace vtypes {

/// p + q*omega with omega^2 = 1 - omega.
struct ZOmega {
  std::int64_t p = 0;
  std::int64_t q = 0;

  friend ZOmega operator+(ZOmega a, ZOmega b) { return {a.p + b.p, a.q + b.q}; }
  friend ZOmega operator-(ZOmega a, ZOmega b) { return {a.p - b.p, a.q - b.q}; }
  friend ZOmega operator-(ZOmega a) { return {-a.p, -a.q}; }
  friend ZOmega operator*(ZOmega a, ZOmega b) {
    return {a.p * b.p + a.q * b.q, a.p * b.q + a.q * b.p - a.q * b.q};
  }
  bool operator==(const ZOmega&) const = default;

  static constexpr ZOmega omega() { return {0, 1}; }
  double value() const;
  std::string str() const;
};

struct EigenvectorPattern {
  int period = 6;
  std::vector<ZOmega> values;  // a_1..a_6 or b_1..b_10

  /// Entry at a 1-based index reduced mod period into 1..period; any integer works.
  ZOmega at(long long i) const;
  /// sum_{i=1}^{upper} with upper reduced mod period into 1..period.
  ZOmega partial_sum(long long upper) const;
  ZOmega period_sum() const;
};

const EigenvectorPattern& period6_pattern();
const EigenvectorPattern& period10_pattern();

struct IdentityCheck {
  std::string identity;  // e.g. "sum_{i=1}^{5-s} a_i = -a_s"
  int s = 0;
  ZOmega lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

std::vector<IdentityCheck> table1_identities();
std::vector<IdentityCheck> table2_identities();

enum class Status { Pass, Fail, Skip };
std::string_view status_name(Status s);

struct VerificationResult {
  std::string claim;
  std::string spec;
  Status status = Status::Pass;
  nlohmann::json witnesses = nlohmann::json::object();
  std::vector<std::string> notes;

  bool ok() const { return status != Status::Fail; }
};

/// A spec with its graph, classifier and per-eigenvalue reports, shared by
/// every claim checked against it.
class AnalyzedGraph {
 public:
  explicit AnalyzedGraph(GraphSpec spec, ClassifierOptions opts = {});

  const GraphSpec& spec() const { return spec_; }
  const std::string& spec_text() const { return text_; }
  const Graph& graph() const { return classifier_->graph(); }
  const Classifier& classifier() const { return *classifier_; }
  const Spectrum& spectrum() const { return classifier_->spectrum(); }
  double tau() const { return spectrum().cluster_tolerance(); }
  std::size_t order() const { return graph().order(); }

  /// lambda_i (1-based), identified exactly where possible.
  const Eigenvalue& eigenvalue(std::size_t i) const;
  const VertexTypeReport& report(std::size_t i) const;
  /// 1-based position of the first member of each cluster.
  std::vector<std::size_t> cluster_positions() const;
  bool is_zero(std::size_t i) const;
  bool is_minus_one(std::size_t i) const;

  /// Spectrum of a derived spec, computed once.
  const Spectrum& derived_spectrum(const GraphSpec& s) const;

 private:
  GraphSpec spec_;
  std::string text_;
  std::unique_ptr<Classifier> classifier_;
  mutable std::map<std::size_t, Eigenvalue> eigenvalues_;
  mutable std::map<std::size_t, VertexTypeReport> reports_;
  mutable std::map<GraphSpec, Spectrum> derived_;
};

// Spectral structure.
VerificationResult verify_nsg_spectrum(const AnalyzedGraph& g);
VerificationResult verify_dng_spectrum(const AnalyzedGraph& g);

// Boundary downers. NSG: DomainError for lambda in {0,-1}. DNG: DomainError for lambda = 0.
VerificationResult verify_nsg_downers(const AnalyzedGraph& g, std::size_t i);
VerificationResult verify_dng_downers(const AnalyzedGraph& g, std::size_t i);

/// For every j, one of U_j, U_{j+1} (and one of V_j, V_{j+1}) is all Downer.
VerificationResult verify_adjacent_cells(const AnalyzedGraph& g, std::size_t i);

/// Localization of lambda_i when every vertex of `cell` is Neutral.
/// One result per sub-claim: "nsg-loc-u-*" (2 <= s <= h-1), "nsg-loc-v-*"
/// (2 <= s <= h) or "dng-loc-*" (2 < s < h-1); out-of-range cells are skipped.
/// Throws DomainError when the cell is not all-Neutral or lambda_i is excluded.
std::vector<VerificationResult> verify_neutral_localization(const AnalyzedGraph& g, CellTag cell, std::size_t i);

struct Interval {
  int s = 0;
  double lo = 0.0, hi = 0.0;
};
/// I_s = (lambda_{n''}(G_s''), lambda_1(G_s'')) for s = 2..h-1.
std::vector<Interval> nsg_intervals(const AnalyzedGraph& g);
/// [lambda_{n_s''}(G_s''), lambda_1(G_s'')) for s = 2..h-1.
std::vector<Interval> dng_intervals(const AnalyzedGraph& g);

/// NSG: lambda outside every I_s (and not 0, -1) has all of U Downer.
VerificationResult verify_interval_corollary(const AnalyzedGraph& g);
/// DNG: lambda_i != 0 outside every half-open interval has every vertex Downer.
VerificationResult verify_dng_interval_corollary(const AnalyzedGraph& g);

/// Every vertex is Downer for lambda_n.
VerificationResult verify_lambda_n_downers(const AnalyzedGraph& g);

VerificationResult verify_interlacing(const AnalyzedGraph& g, double slack = 1e-7);
/// Eigenspace downers equal multiplicity downers for every eigenvalue.
VerificationResult verify_cross_validation(const AnalyzedGraph& g);

/// Every claim that applies to the spec's family, one result per claim id.
std::vector<VerificationResult> verify_all(const GraphSpec& spec, ClassifierOptions opts = {});
/// Claim ids verify_all can produce for a family.
std::vector<std::string> claim_ids(Family f);
/// Results of verify_all whose claim equals `claim` or starts with `claim` + "-".
std::vector<VerificationResult> verify_claim(const GraphSpec& spec, const std::string& claim,
                                             ClassifierOptions opts = {});

/// The worked examples, the counterexample constructions and the identity tables.
std::vector<VerificationResult> verify_golden_claims();

struct PatternEigenvector {
  Graph graph;
  AlgebraicNumber eigenvalue = AlgebraicNumber::zero();
  std::vector<double> vector;
  std::vector<Vertex> zeros;  // positions where the pattern vanishes
};

/// H(h) with lambda = 1 (h = 1 mod 6) or -1 (h = 4 mod 6). DomainError otherwise.
PatternEigenvector build_period6(int h);
/// H(h) with lambda = omega (h = 7 mod 10) or -omega (h = 2 mod 10). DomainError otherwise.
PatternEigenvector build_period10(int h);

/// (x, x) for lambda becomes (x, -x) for -lambda. DomainError unless the input
/// is an eigenvector and the graph is bipartite with U/V labels.
PatternEigenvector negate_pattern(const PatternEigenvector& p);

struct Duplication {
  Graph graph;
  std::vector<double> vector;
  std::vector<Vertex> duplicates;
};

/// Adds `count` twins of v (same neighbourhood) with zero entries.
/// DomainError when x(v) != 0, lambda = 0, or x is not an eigenvector.
Duplication extend_by_duplication(const Graph& g, double lambda, std::span<const double> x, Vertex v,
                                  std::size_t count);

}  // namespace vtypes
