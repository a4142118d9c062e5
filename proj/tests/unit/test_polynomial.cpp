#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "vtypes/error.hpp"
#include "vtypes/polynomial.hpp"

using namespace vtypes;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, int max_degree, int bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial monic_random(std::mt19937_64& rng, int degree, int bound) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = coef(rng);
  c.back() = 1;
  return IntPolynomial(std::move(c));
}

/// (x - r_1)...(x - r_k)
IntPolynomial from_roots(std::initializer_list<long long> roots) {
  IntPolynomial p{1};
  for (auto r : roots) p = p * IntPolynomial::linear(r);
  return p;
}

}  // namespace

TEST_CASE("construction and basic arithmetic") {
  const IntPolynomial p{1, 0, -3, 0, 1};
  CHECK(p.degree() == 4);
  CHECK(p.is_monic());
  CHECK(p.to_string() == "x^4 - 3x^2 + 1");
  CHECK(IntPolynomial{0, 0, 0}.is_zero());
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{-1, 1, 1} * IntPolynomial{-1, -1, 1} == IntPolynomial{1, 0, -3, 0, 1});
  CHECK(IntPolynomial{2, 1} - IntPolynomial{2, 1} == IntPolynomial{});
  CHECK(p.eval(BigInt(2)) == 5);
  CHECK(p.eval(0.5) == doctest::Approx(0.3125));
  CHECK(p.derivative() == IntPolynomial{0, -6, 0, 4});
  CHECK(IntPolynomial{-2, 1}.reflected() == IntPolynomial{2, 1});
  CHECK(IntPolynomial{-1, 1, 1}.reflected() == IntPolynomial{-1, -1, 1});
}

TEST_CASE("monic division recovers quotient and remainder") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPolynomial d = monic_random(rng, 1 + trial % 4, 5);
    const IntPolynomial q = random_poly(rng, 5, 9);
    IntPolynomial r = random_poly(rng, d.degree() - 1, 9);
    if (d.degree() == 0) r = {};
    const auto div = divide_monic(q * d + r, d);
    CHECK(div.quotient == q);
    CHECK(div.remainder == r);
  }
  CHECK_THROWS_AS(divide_monic(IntPolynomial{1, 1}, IntPolynomial{1, 2}), DomainError);
}

TEST_CASE("coefficient lists") {
  CHECK(parse_coefficients("-1,1,1") == IntPolynomial{-1, 1, 1});
  CHECK(parse_coefficients(" 2 , +0 ,1") == IntPolynomial{2, 0, 1});
  CHECK(parse_coefficients("123456789012345678901234567890").coefficient(0) ==
        BigInt("123456789012345678901234567890"));
  CHECK_THROWS_WITH_AS(parse_coefficients("1,a,1"), doctest::Contains("'a'"), DomainError);
  CHECK_THROWS_AS(parse_coefficients("1,,1"), DomainError);
  CHECK_THROWS_AS(parse_coefficients("0,0"), DomainError);
  CHECK_THROWS_AS(parse_coefficients("-"), DomainError);
}

TEST_CASE("Sturm counts distinct real roots in closed intervals") {
  const IntPolynomial p = from_roots({-3, -1, 0, 2, 5});
  CHECK(count_real_roots(p, -10, 10) == 5);
  CHECK(count_real_roots(p, -1, 2) == 3);
  CHECK(count_real_roots(p, Rational(-1, 2), Rational(1, 2)) == 1);
  CHECK(count_real_roots(p, 3, 4) == 0);
  CHECK(count_real_roots(p, 5, 5) == 1);
  CHECK(count_real_roots(p, 6, 5) == 0);
  // x^2 + x - 1 has roots -1.618 and 0.618
  const IntPolynomial q{-1, 1, 1};
  CHECK(count_real_roots(q, 0, 1) == 1);
  CHECK(count_real_roots(q, -2, 1) == 2);
  CHECK(count_real_roots(IntPolynomial{1, 0, 1}, -100, 100) == 0);
  CHECK_THROWS_AS(count_real_roots(IntPolynomial{}, 0, 1), DomainError);
}

TEST_CASE("Sturm agrees with sign changes on random integer-root products") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> root(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> rs;
    IntPolynomial p{1};
    while (rs.size() < 4) {
      int r = root(rng);
      if (std::find(rs.begin(), rs.end(), r) != rs.end()) continue;
      rs.push_back(r);
      p = p * IntPolynomial::linear(r);
    }
    const int lo = root(rng), hi = root(rng);
    int expected = 0;
    for (int r : rs) expected += (lo <= r && r <= hi) ? 1 : 0;
    CHECK(count_real_roots(p, lo, hi) == expected);
  }
}

TEST_CASE("primitive part and gcd") {
  CHECK(primitive_part(IntPolynomial{-4, 6, -2}) == IntPolynomial{2, -3, 1});
  CHECK(polynomial_gcd(from_roots({1, 2, 3}), from_roots({2, 3, 4})) == from_roots({2, 3}));
  CHECK(polynomial_gcd(IntPolynomial{1, 1}, IntPolynomial{-1, 1}).degree() == 0);
  CHECK(polynomial_gcd(IntPolynomial{3, 3}, IntPolynomial{}) == IntPolynomial{1, 1});

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPolynomial c = monic_random(rng, 1 + trial % 3, 4);
    const IntPolynomial a = monic_random(rng, 3, 6) * c;
    const IntPolynomial b = monic_random(rng, 2, 6) * c;
    const IntPolynomial g = polynomial_gcd(a, b);
    // common factor divides the gcd, and the gcd divides both inputs
    REQUIRE(g.is_monic());
    CHECK(divide_monic(a, g).remainder.is_zero());
    CHECK(divide_monic(b, g).remainder.is_zero());
    CHECK(divide_monic(g, c).remainder.is_zero());
  }
}

TEST_CASE("multiplicity of an isolated root") {
  const IntPolynomial host = from_roots({-2, 1, 3});
  const IntPolynomial p = from_roots({1, 1, 1, 3, -5});
  CHECK(isolated_root_multiplicity(p, host, 0, 2) == 3);
  CHECK(isolated_root_multiplicity(p, host, Rational(5, 2), 4) == 1);
  CHECK(isolated_root_multiplicity(p, host, -3, Rational(-3, 2)) == 0);
  CHECK_THROWS_AS(isolated_root_multiplicity(p, host, -3, 2), DomainError);

  // irrational root: (x^2 + x - 1)^2 (x - 4) against x^2 + x - 1
  const IntPolynomial q = IntPolynomial{-1, 1, 1} * IntPolynomial{-1, 1, 1} * IntPolynomial::linear(4);
  CHECK(isolated_root_multiplicity(q, IntPolynomial{-1, 1, 1}, Rational(1, 2), 1) == 2);
}

TEST_CASE("exact double to rational") {
  CHECK(to_rational(0.5) == Rational(1, 2));
  CHECK(to_rational(-3.0) == Rational(-3));
  CHECK(to_rational(0.1) != Rational(1, 10));
  CHECK(boost::multiprecision::denominator(to_rational(0.1)) == BigInt(1) << 55);
  CHECK_THROWS_AS(to_rational(std::numeric_limits<double>::infinity()), DomainError);
}
