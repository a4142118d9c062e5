#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "oracles.hpp"
#include "vtypes/error.hpp"
#include "vtypes/spectrum.hpp"

using namespace vtypes;

namespace {

std::vector<double> eigen_values(const Graph& g) {
  const std::size_t n = g.order();
  Eigen::MatrixXd a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = g.adjacent(i, j) ? 1.0 : 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(v.rbegin(), v.rend());
  return v;
}

}  // namespace

TEST_CASE("Jacobi matches an independent dense solver") {
  oracle::SpecGen gen(404);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = trial % 3 == 0 ? oracle::to_graph(gen.random_graph(static_cast<std::size_t>(gen.pick(1, 25)), 0.5))
                                   : build(gen(trial % 2 ? Family::Chain : Family::Threshold, 6, 4));
    const Spectrum s = eig_sym(g);
    const auto ref = eigen_values(g);
    REQUIRE(s.order() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(s.values()[i] == doctest::Approx(ref[i]).epsilon(1e-9).scale(1.0));
    for (const auto& p : s.pairs()) {
      const double norm = std::sqrt(std::inner_product(p.vector.begin(), p.vector.end(), p.vector.begin(), 0.0));
      CHECK(norm == doctest::Approx(1.0));
      CHECK(sum_rule_residual(g, p.value, p.vector) < 1e-10);
    }
  }
}

TEST_CASE("Jacobi on a general symmetric matrix") {
  DenseMatrix<double> a(3, 3);
  const double v[3][3] = {{4, 1, -2}, {1, 2, 0}, {-2, 0, 3}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) a(i, j) = v[i][j];
  const auto e = jacobi_eigen(a);
  double trace = 0;
  for (double x : e.values) trace += x;
  CHECK(trace == doctest::Approx(9.0));
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t i = 0; i < 3; ++i) {
      double av = 0;
      for (std::size_t j = 0; j < 3; ++j) av += a(i, j) * e.vectors(j, k);
      CHECK(av == doctest::Approx(e.values[k] * e.vectors(i, k)).scale(1.0));
    }
  }
}

TEST_CASE("clusters, ordering and tolerances") {
  const Spectrum s = eig_sym(build(dng({2}, {2})));
  REQUIRE(s.clusters().size() == 3);
  CHECK(s.lambda(1) == doctest::Approx(2.0));
  CHECK(s.lambda(4) == doctest::Approx(-2.0));
  CHECK(s.cluster_of(2).multiplicity == 2);
  CHECK(s.cluster_of(3).first == 1);
  CHECK(s.cluster_tolerance() == doctest::Approx(2e-7));
  CHECK(s.spectral_radius() == doctest::Approx(2.0));
  CHECK(s.find(1e-9) == &s.clusters()[1]);
  CHECK(s.find(0.5) == nullptr);
  CHECK_THROWS_AS(s.lambda(0), DomainError);
  CHECK_THROWS_AS(s.lambda(5), DomainError);
  CHECK(default_cluster_tolerance(0.3) == doctest::Approx(1e-7));

  SpectrumOptions loose;
  loose.cluster_tolerance = 5.0;
  CHECK(eig_sym(build(dng({2}, {2})), loose).clusters().size() == 1);

  const auto basis = s.basis(s.clusters()[1]);
  CHECK(basis.rows() == 4);
  CHECK(basis.cols() == 2);
}

TEST_CASE("spectrum of the half graph H(2)") {
  const Spectrum s = eig_sym(half_graph(2));
  const double phi = (1 + std::sqrt(5.0)) / 2;
  const double expect[] = {phi, phi - 1, 1 - phi, -phi};
  for (std::size_t i = 0; i < 4; ++i) CHECK(s.values()[i] == doctest::Approx(expect[i]).epsilon(1e-12));
}

TEST_CASE("main eigenvalues") {
  // regular graph: only the degree is main
  const Spectrum c6 = eig_sym(cycle_graph(6));
  for (const auto& c : c6.clusters()) CHECK(c.main == (std::abs(c.value - 2.0) < 1e-9));
  // the spectral radius of a connected graph is always main
  oracle::SpecGen gen(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Spectrum s = eig_sym(build(gen(trial % 2 ? Family::Chain : Family::Threshold, 5, 3)));
    CHECK(s.clusters().front().main);
    CHECK(is_main_numeric(s, s.clusters().front(), 1e-7));
  }
}

TEST_CASE("Cauchy interlacing on vertex-deleted subgraphs") {
  oracle::SpecGen gen(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = build(gen(trial % 2 ? Family::Chain : Family::Threshold, 5, 3));
    const Vertex v = static_cast<Vertex>(gen.pick(0, static_cast<int>(g.order()) - 1));
    if (g.order() < 2) continue;
    CHECK(check_interlacing(g, delete_vertex(g, v)));
  }
  // a graph that is not an induced subgraph violates the inequalities
  const Spectrum k4 = eig_sym(complete_graph(4));
  const Spectrum k3_like = eig_sym(complete_graph(3));
  CHECK(check_interlacing(k4, k3_like, 1e-9));
  CHECK_FALSE(check_interlacing(eig_sym(path_graph(4)), eig_sym(complete_graph(3)), 1e-9));
  CHECK_THROWS_AS(check_interlacing(k4, k4, 1e-9), DomainError);
}

TEST_CASE("sum rule residual") {
  const Graph k2 = complete_graph(2);
  const std::vector<double> x{1.0, 1.0};
  CHECK(sum_rule_residual(k2, 1.0, x) < 1e-15);
  CHECK(verify_eigenvector(k2, 1.0, x, 1e-12));
  CHECK_FALSE(verify_eigenvector(k2, -1.0, x, 1e-12));
  CHECK_THROWS_AS(sum_rule_residual(k2, 1.0, std::vector<double>{0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(sum_rule_residual(k2, 1.0, std::vector<double>{1.0}), DomainError);
}

TEST_CASE("numeric multiplicity counts within tolerance") {
  const Graph g = build(nsg({2, 2, 2}, {2, 3, 2}));
  CHECK(numeric_multiplicity(g, 0.0) == 3);
  CHECK(numeric_multiplicity(g, -1.0) == 4);
  CHECK(numeric_multiplicity(g, -2.0) == 1);
  CHECK(numeric_multiplicity(g, 0.5) == 0);
}
