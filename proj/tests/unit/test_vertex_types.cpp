#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "vtypes/error.hpp"
#include "vtypes/exact.hpp"
#include "vtypes/vertex_types.hpp"

using namespace vtypes;

namespace {

VertexType from_delta(int d) {
  REQUIRE(d >= -1);
  REQUIRE(d <= 1);
  return d < 0 ? VertexType::Downer : (d == 0 ? VertexType::Neutral : VertexType::Parter);
}

/// Minimal polynomial coefficients of an integer or +-omega.
std::vector<long long> coeffs(const AlgebraicNumber& a) {
  std::vector<long long> out;
  for (const auto& c : a.minpoly().coefficients()) out.push_back(static_cast<long long>(c));
  return out;
}

}  // namespace

TEST_CASE("types on the threshold example at -2") {
  const Classifier cl(build(nsg({2, 2, 2}, {2, 3, 2})));
  const auto r = cl.classify_all(Eigenvalue::of(AlgebraicNumber::integer(-2)));
  CHECK(r.multiplicity == 1);
  CHECK(r.cell_type({Side::U, 3}) == VertexType::Downer);
  CHECK(r.cell_type({Side::V, 3}) == VertexType::Neutral);
  CHECK(r.route == Route::BothAgree);
  CHECK(r.anomalies.empty());
  CHECK(r.vertices_of(VertexType::Neutral) == std::vector<Vertex>{11, 12});
}

TEST_CASE("types agree with the nullity oracle on random specs") {
  oracle::SpecGen gen(31);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const GraphSpec s = gen(trial % 2 ? Family::Chain : Family::Threshold, 4, 3);
    CAPTURE(format_spec(s));
    const Classifier cl(build(s));
    const auto a = oracle::adjacency(s);
    for (const AlgebraicNumber& lam : {AlgebraicNumber::zero(), AlgebraicNumber::minus_one(), AlgebraicNumber::integer(1),
                                       AlgebraicNumber::integer(-2), AlgebraicNumber::omega(),
                                       AlgebraicNumber::minus_omega()}) {
      const auto q = coeffs(lam);
      if (oracle::multiplicity(a, q) == 0) {
        CHECK_THROWS_AS(cl.classify_all(Eigenvalue::of(lam)), NotAnEigenvalue);
        continue;
      }
      const auto r = cl.classify_all(Eigenvalue::of(lam));
      CHECK(r.multiplicity == oracle::multiplicity(a, q));
      for (Vertex v = 0; v < a.size(); ++v) CHECK(r.per_vertex[v] == from_delta(oracle::type_delta(a, q, v)));
      CHECK(cl.cross_validate(Eigenvalue::of(lam)));
      ++checked;
    }
  }
  CHECK(checked > 60);
}

TEST_CASE("identify recovers integers and quadratics") {
  const Classifier h7(half_graph(7));
  for (std::size_t i = 1; i <= 14; ++i) {
    const Eigenvalue e = h7.eigenvalue_at(i);
    CHECK(std::abs(e.approx - h7.spectrum().lambda(i)) < 1e-9);
    if (!e.exact) continue;
    CHECK(root_multiplicity(h7.char_poly(), *e.exact) >= 1);
  }
  const auto w = h7.identify(AlgebraicNumber::omega().approx());
  REQUIRE(w.has_value());
  CHECK(*w == AlgebraicNumber::omega());
  const auto one = h7.identify(1.0);
  REQUIRE(one.has_value());
  CHECK(one->as_integer() == BigInt(1));

  // largest eigenvalue of H(3) is a cubic root; no quadratic match
  const Classifier h3(half_graph(3));
  CHECK_FALSE(h3.identify(h3.spectrum().lambda(1)).has_value());
}

TEST_CASE("Perron value: every vertex is a downer") {
  oracle::SpecGen gen(41);
  for (int trial = 0; trial < 20; ++trial) {
    const Classifier cl(build(gen(trial % 2 ? Family::Chain : Family::Threshold, 4, 3)));
    const auto r = cl.classify_all(cl.eigenvalue_at(1));
    CHECK(r.multiplicity == 1);
    CHECK(r.vertices_of(VertexType::Downer).size() == cl.graph().order());
  }
}

TEST_CASE("an eigenvalue with tiny eigenvector entries is classified exactly") {
  // lambda_22 has x(v) ~ 9e-4 on V_1, so G - v keeps an eigenvalue within tau
  const Classifier cl(build(nsg({2, 4, 4, 3}, {3, 4, 4, 1})));
  const Eigenvalue e = cl.eigenvalue_at(22);
  CHECK_FALSE(e.exact.has_value());
  const auto r = cl.classify_all(e);
  CHECK(r.route == Route::Exact);
  REQUIRE(r.isolation.has_value());
  CHECK(r.isolation->first < e.approx);
  CHECK(e.approx < r.isolation->second);
  CHECK(r.vertices_of(VertexType::Downer).size() == cl.graph().order());
  CHECK_FALSE(r.anomalies.empty());
  CHECK(downers_via_eigenspace(cl.spectrum(), cl.spectrum().cluster_of(22)).size() == cl.graph().order());

  ClassifierOptions numeric;
  numeric.isolate_roots = false;
  const Classifier nc(build(nsg({2, 4, 4, 3}, {3, 4, 4, 1})), numeric);
  const auto rn = nc.classify_all(Eigenvalue::numeric(e.approx));
  CHECK(rn.route == Route::Numeric);
  CHECK_FALSE(rn.isolation.has_value());
  CHECK(rn.cell_type({Side::V, 1}) == VertexType::Neutral);
}

TEST_CASE("isolation intervals hold exactly one root") {
  const Classifier cl(half_graph(5));
  for (const auto& c : cl.spectrum().clusters()) {
    const auto iso = cl.isolate(c.value);
    REQUIRE(iso.has_value());
    CHECK(count_real_roots(cl.squarefree_char_poly(), iso->lo, iso->hi) == 1);
  }
  CHECK_FALSE(cl.isolate(10.0).has_value());
}

TEST_CASE("multiplicity in vertex-deleted subgraphs") {
  const Graph h4 = half_graph(4);
  const Classifier cl(h4);
  const auto m1 = Eigenvalue::of(AlgebraicNumber::minus_one());
  CHECK(cl.multiplicity(m1) == 1);
  CHECK(cl.multiplicity_without(1, m1) == 1);
  CHECK(cl.multiplicity_without(0, m1) == 0);
  CHECK(cl.char_poly_without(1) == char_poly(delete_vertex(h4, 1)));
  CHECK(cl.spectrum_without(1).order() == 7);
  CHECK(classify_vertex(h4, m1, 1) == VertexType::Neutral);
  CHECK(classify_vertex(h4, m1, 0) == VertexType::Downer);
  CHECK(cross_validate(h4, m1));
}

TEST_CASE("Parter vertices exist for stars") {
  // 0 has multiplicity leaves-1 in a star; removing the centre leaves leaves isolated vertices
  const Graph s = star_graph(4);
  const auto r = classify_all(s, Eigenvalue::of(AlgebraicNumber::zero()));
  CHECK(r.multiplicity == 3);
  CHECK(r.per_vertex[0] == VertexType::Parter);
  for (Vertex v = 1; v <= 4; ++v) CHECK(r.per_vertex[v] == VertexType::Downer);
}

TEST_CASE("non-eigenvalues are rejected") {
  const Graph g = half_graph(4);
  CHECK_THROWS_AS(classify_all(g, Eigenvalue::of(AlgebraicNumber::integer(3))), NotAnEigenvalue);
  CHECK_THROWS_AS(classify_all(g, Eigenvalue::numeric(0.1234)), NotAnEigenvalue);
  CHECK_THROWS_AS(classify_vertex(g, Eigenvalue::of(AlgebraicNumber::omega()), 0), NotAnEigenvalue);
}

TEST_CASE("names") {
  CHECK(type_name(VertexType::Downer) == "downer");
  CHECK(type_name(VertexType::Neutral) == "neutral");
  CHECK(type_name(VertexType::Parter) == "parter");
  CHECK(route_name(Route::BothAgree) == "both-agree");
  CHECK(Eigenvalue::of(AlgebraicNumber::omega()).describe() == "omega");
}
