#include "vtypes/vertex_types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vtypes/error.hpp"
#include "vtypes/exact.hpp"

namespace vtypes {

std::string_view type_name(VertexType t) {
  switch (t) {
    case VertexType::Downer: return "downer";
    case VertexType::Neutral: return "neutral";
    case VertexType::Parter: return "parter";
  }
  return "?";
}

std::string_view route_name(Route r) {
  switch (r) {
    case Route::Exact: return "exact";
    case Route::Numeric: return "numeric";
    case Route::BothAgree: return "both-agree";
  }
  return "?";
}

std::string Eigenvalue::describe() const {
  if (exact) return exact->describe();
  std::ostringstream out;
  out.precision(12);
  out << approx;
  return out.str();
}

std::vector<Vertex> VertexTypeReport::vertices_of(VertexType t) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < per_vertex.size(); ++v)
    if (per_vertex[v] == t) out.push_back(v);
  return out;
}

std::optional<VertexType> VertexTypeReport::cell_type(CellTag tag) const {
  for (const auto& c : per_cell)
    if (c.tag == tag) return c.type;
  return std::nullopt;
}

Classifier::Classifier(Graph g, ClassifierOptions opts)
    : graph_(std::move(g)), opts_(opts), spectrum_(eig_sym(graph_, opts_.spectrum)) {
  deleted_.reserve(graph_.order());
  for (Vertex v = 0; v < graph_.order(); ++v) deleted_.push_back(std::make_unique<Deleted>());
}

const IntPolynomial& Classifier::char_poly() const {
  std::call_once(poly_once_, [this] { poly_ = vtypes::char_poly(graph_); });
  return poly_;
}

const IntPolynomial& Classifier::char_poly_without(Vertex v) const {
  if (v >= graph_.order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
  auto& d = *deleted_[v];
  std::call_once(d.poly_once, [&] { d.poly = vtypes::char_poly(delete_vertex(graph_, v)); });
  return d.poly;
}

const Spectrum& Classifier::spectrum_without(Vertex v) const {
  if (v >= graph_.order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
  auto& d = *deleted_[v];
  std::call_once(d.spec_once, [&] {
    // numeric multiplicities in G - v use the host's cluster tolerance
    SpectrumOptions o = opts_.spectrum;
    o.cluster_tolerance = spectrum_.cluster_tolerance();
    d.spectrum = eig_sym(delete_vertex(graph_, v), o);
  });
  return d.spectrum;
}

const IntPolynomial& Classifier::squarefree_char_poly() const {
  std::call_once(sf_once_, [this] {
    const auto& p = char_poly();
    sf_ = divide_monic(p, polynomial_gcd(p, p.derivative())).quotient;
  });
  return sf_;
}

std::optional<Isolation> Classifier::isolate(double value) const {
  const Cluster* c = spectrum_.find(value);
  if (!c) return std::nullopt;
  std::lock_guard lock(iso_mutex_);
  auto it = isolations_.find(c->first);
  if (it != isolations_.end()) return it->second;

  // radius: the cluster tolerance, shrunk to stay clear of neighbouring clusters
  double radius = spectrum_.cluster_tolerance();
  for (const auto& other : spectrum_.clusters())
    if (other.first != c->first) radius = std::min(radius, 0.5 * std::abs(other.value - c->value));
  std::optional<Isolation> iso;
  if (radius > 0.0) {
    Isolation cand{to_rational(c->value - radius), to_rational(c->value + radius)};
    if (count_real_roots(squarefree_char_poly(), cand.lo, cand.hi) == 1) iso = std::move(cand);
  }
  return isolations_.emplace(c->first, std::move(iso)).first->second;
}

std::optional<std::size_t> Classifier::exact_multiplicity(const Eigenvalue& lambda) const {
  if (lambda.exact) return root_multiplicity(char_poly(), *lambda.exact);
  if (!opts_.isolate_roots) return std::nullopt;
  const auto iso = isolate(lambda.approx);
  if (!iso) return std::nullopt;
  return isolated_root_multiplicity(char_poly(), squarefree_char_poly(), iso->lo, iso->hi);
}

std::optional<std::size_t> Classifier::exact_multiplicity_without(Vertex v, const Eigenvalue& lambda) const {
  if (lambda.exact) {
    const auto& p = char_poly_without(v);
    return p.degree() == 0 ? 0 : root_multiplicity(p, *lambda.exact);
  }
  if (!opts_.isolate_roots) return std::nullopt;
  const auto iso = isolate(lambda.approx);
  if (!iso) return std::nullopt;
  // no eigenvalue of G - v anywhere near lambda: backward error is far below the tolerance
  if (numeric_multiplicity_without(v, lambda.approx) == 0) return 0;
  return isolated_root_multiplicity(char_poly_without(v), squarefree_char_poly(), iso->lo, iso->hi);
}

std::size_t Classifier::numeric_multiplicity_without(Vertex v, double lambda) const {
  return numeric_multiplicity(spectrum_without(v), lambda, spectrum_.cluster_tolerance());
}

std::size_t Classifier::multiplicity(const Eigenvalue& lambda) const {
  if (auto k = exact_multiplicity(lambda)) return *k;
  return numeric_multiplicity(spectrum_, lambda.approx);
}

std::size_t Classifier::multiplicity_without(Vertex v, const Eigenvalue& lambda) const {
  if (auto k = exact_multiplicity_without(v, lambda)) return *k;
  return numeric_multiplicity_without(v, lambda.approx);
}

namespace {

VertexType type_from(std::size_t k, std::size_t kv) {
  if (kv + 1 == k) return VertexType::Downer;
  if (kv == k) return VertexType::Neutral;
  if (kv == k + 1) return VertexType::Parter;
  // interlacing makes any other difference impossible
  throw Error("multiplicity jumped from " + std::to_string(k) + " to " + std::to_string(kv));
}

std::optional<VertexType> type_if_valid(std::size_t k, std::size_t kv) {
  if (kv + 1 == k) return VertexType::Downer;
  if (kv == k) return VertexType::Neutral;
  if (kv == k + 1) return VertexType::Parter;
  return std::nullopt;
}

}  // namespace

VertexType Classifier::classify_vertex(const Eigenvalue& lambda, Vertex v) const {
  if (v >= graph_.order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
  const auto k = multiplicity(lambda);
  if (k == 0) throw NotAnEigenvalue(lambda.describe() + " is not an eigenvalue of the graph");
  return type_from(k, multiplicity_without(v, lambda));
}

VertexTypeReport Classifier::classify_all(const Eigenvalue& lambda) const {
  const auto n = graph_.order();
  VertexTypeReport r;
  r.eigenvalue = lambda;
  r.tolerance = spectrum_.cluster_tolerance();

  const auto k_exact = exact_multiplicity(lambda);
  const auto k_num = numeric_multiplicity(spectrum_, lambda.approx);
  r.multiplicity = k_exact ? *k_exact : k_num;
  if (r.multiplicity == 0) throw NotAnEigenvalue(lambda.describe() + " is not an eigenvalue of the graph");
  if (k_exact && !lambda.exact) {
    const auto iso = isolate(lambda.approx);
    r.isolation = std::pair{iso->lo.convert_to<double>(), iso->hi.convert_to<double>()};
  }

  r.per_vertex.resize(n);
  bool agree = !k_exact || k_num == *k_exact;
  if (k_exact && !agree)
    r.anomalies.push_back("numeric multiplicity " + std::to_string(k_num) + " differs from exact " +
                          std::to_string(*k_exact));
  for (Vertex v = 0; v < n; ++v) {
    const auto kv_num = numeric_multiplicity_without(v, lambda.approx);
    if (!k_exact) {
      const auto t = type_if_valid(k_num, kv_num);
      if (!t) throw Error("numeric multiplicity jumped from " + std::to_string(k_num) + " to " + std::to_string(kv_num));
      r.per_vertex[v] = *t;
      continue;
    }
    r.per_vertex[v] = type_from(*k_exact, *exact_multiplicity_without(v, lambda));
    const auto t_num = type_if_valid(k_num, kv_num);
    if (!t_num || *t_num != r.per_vertex[v]) {
      agree = false;
      r.anomalies.push_back("numeric route disagrees at vertex " + std::to_string(v));
    }
  }
  r.route = !k_exact ? Route::Numeric : (agree ? Route::BothAgree : Route::Exact);

  for (const auto& tag : graph_.cells()) {
    CellVerdict cv{tag, std::nullopt};
    const auto members = graph_.cell_members(tag);
    const VertexType first = r.per_vertex[members.front()];
    const bool uniform = std::all_of(members.begin(), members.end(),
                                     [&](Vertex v) { return r.per_vertex[v] == first; });
    if (uniform) {
      cv.type = first;
    } else {
      r.anomalies.push_back("mixed vertex types in cell " + tag.str());
    }
    r.per_cell.push_back(cv);
  }
  return r;
}

std::vector<Vertex> downers_via_eigenspace(const Spectrum& s, const Cluster& c, double tol) {
  if (c.multiplicity == 0) throw DomainError("empty eigenvalue cluster");
  const auto b = s.basis(c);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < s.order(); ++v) {
    double row = 0.0;
    for (std::size_t q = 0; q < b.cols(); ++q) row += b(v, q) * b(v, q);
    if (std::sqrt(row) > tol) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> Classifier::downers_via_eigenspace(const Cluster& c) const {
  return vtypes::downers_via_eigenspace(spectrum_, c, opts_.coordinate_tolerance);
}

bool Classifier::cross_validate(const Eigenvalue& lambda) const {
  const Cluster* c = spectrum_.find(lambda.approx);
  if (!c) throw NotAnEigenvalue(lambda.describe() + " is not an eigenvalue of the graph");
  const auto report = classify_all(lambda);
  return downers_via_eigenspace(*c) == report.vertices_of(VertexType::Downer);
}

std::optional<AlgebraicNumber> Classifier::identify(double value, std::span<const IntPolynomial> candidates) const {
  const double tol = spectrum_.cluster_tolerance();
  const auto& p = char_poly();

  const double r = std::round(value);
  if (std::abs(value - r) <= tol && std::abs(r) < 9e15) {
    auto k = AlgebraicNumber::integer(static_cast<long long>(r));
    if (root_multiplicity(p, k) > 0) return k;
  }

  auto try_poly = [&](const IntPolynomial& q) -> std::optional<AlgebraicNumber> {
    if (!q.is_monic() || q.degree() < 1) return std::nullopt;
    if (std::abs(q.eval(value)) > 1e-4 * (1.0 + std::abs(value))) return std::nullopt;
    try {
      auto a = AlgebraicNumber::make(q, value, tol);
      if (root_multiplicity(p, a) > 0) return a;
    } catch (const DomainError&) {
    }
    return std::nullopt;
  };

  for (const auto& q : candidates)
    if (auto a = try_poly(q)) return a;
  for (const auto* builtin : {&AlgebraicNumber::omega(), &AlgebraicNumber::minus_omega()})
    if (auto a = try_poly(builtin->minpoly())) return a;

  // rational quadratic: x^2 - (value + mu) x + value * mu with integer coefficients
  for (const auto& c : spectrum_.clusters()) {
    const double mu = c.value;
    if (std::abs(mu - value) <= tol) continue;
    const double sum = value + mu;
    const double prod = value * mu;
    const double rs = std::round(sum);
    const double rp = std::round(prod);
    const double slack = 1e-6 * (1.0 + std::abs(value) + std::abs(mu));
    if (std::abs(sum - rs) > slack || std::abs(prod - rp) > slack * (1.0 + std::abs(value) + std::abs(mu))) continue;
    IntPolynomial q{static_cast<long long>(rp), -static_cast<long long>(rs), 1};
    if (auto a = try_poly(q)) return a;
  }
  return std::nullopt;
}

Eigenvalue Classifier::eigenvalue_at(std::size_t i, std::span<const IntPolynomial> candidates) const {
  const double v = spectrum_.lambda(i);
  if (auto a = identify(v, candidates)) return Eigenvalue::of(*a);
  return Eigenvalue::numeric(v);
}

VertexType classify_vertex(const Graph& g, const Eigenvalue& lambda, Vertex v) {
  if (v >= g.order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
  return Classifier(g).classify_vertex(lambda, v);
}

VertexTypeReport classify_all(const Graph& g, const Eigenvalue& lambda) { return Classifier(g).classify_all(lambda); }

bool cross_validate(const Graph& g, const Eigenvalue& lambda) { return Classifier(g).cross_validate(lambda); }

}  // namespace vtypes
