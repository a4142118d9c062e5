#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "vtypes/bigint.hpp"

namespace vtypes {

/// Dense univariate polynomial over the integers, constant term first.
/// Canonical: no trailing zeros; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial x() { return IntPolynomial{0, 1}; }
  /// x - root
  static IntPolynomial linear(const BigInt& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt{0}; }
  const BigInt& leading() const { return coeffs_.back(); }

  BigInt eval(const BigInt& t) const;
  double eval(double t) const;
  IntPolynomial derivative() const;
  /// (-1)^deg p(-x): monic stays monic, roots are negated.
  IntPolynomial reflected() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  bool operator==(const IntPolynomial&) const = default;

  /// Human-readable form, e.g. "x^4 - 3x^2 + 1".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

struct PolynomialDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Exact division by a monic divisor; throws DomainError if the divisor is not monic.
PolynomialDivision divide_monic(const IntPolynomial& dividend, const IntPolynomial& divisor);

/// Parses a coefficient list "c0,c1,...,cd" (constant term first).
IntPolynomial parse_coefficients(const std::string& text);

/// Number of distinct real roots of a square-free polynomial in the closed
/// interval [lo, hi], by an exact Sturm sequence. Throws DomainError if p is zero.
int count_real_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi);

/// Content removed, leading coefficient positive. Zero stays zero.
IntPolynomial primitive_part(const IntPolynomial& p);
/// Primitive gcd over Z[x] (equivalently over Q[x] up to a unit) by a primitive remainder sequence.
IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Multiplicity of theta as a root of p, where theta is the only distinct real
/// root of `host` in [lo, hi]: the number of leading derivatives of p that
/// vanish at theta, each decided by a Sturm count on gcd(host, p^(k)).
/// Throws DomainError when the interval does not isolate exactly one root of host.
std::size_t isolated_root_multiplicity(const IntPolynomial& p, const IntPolynomial& host, const Rational& lo,
                                       const Rational& hi);

}  // namespace vtypes
