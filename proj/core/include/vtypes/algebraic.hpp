#pragma once

#include <optional>
#include <string>

#include "vtypes/polynomial.hpp"

namespace vtypes {

/// A real algebraic integer given by its monic minimal polynomial and an
/// isolating approximation: exactly one real root of the minimal polynomial
/// lies within `isolation_radius` of `approx`.
class AlgebraicNumber {
 public:
  /// Validates monicity, the isolation interval (Sturm), the residual sanity
  /// check, and irreducibility for degree <= 2. Throws DomainError.
  static AlgebraicNumber make(IntPolynomial minpoly, double approx, double isolation_radius);
  static AlgebraicNumber integer(long long k);

  static const AlgebraicNumber& zero();
  static const AlgebraicNumber& minus_one();
  /// Positive root of x^2 + x - 1, approx 0.6180339887.
  static const AlgebraicNumber& omega();
  /// -omega, root of x^2 - x - 1.
  static const AlgebraicNumber& minus_omega();

  const IntPolynomial& minpoly() const { return minpoly_; }
  double approx() const { return approx_; }
  double isolation_radius() const { return radius_; }
  int degree() const { return minpoly_.degree(); }
  bool is_rational() const { return degree() == 1; }
  /// Set when degree > 2: irreducibility was taken on trust.
  bool irreducibility_assumed() const { return degree() > 2; }
  std::optional<BigInt> as_integer() const;

  AlgebraicNumber negated() const;
  /// "omega", "-omega", an integer, or "root of <poly> near <approx>".
  std::string describe() const;

  bool operator==(const AlgebraicNumber& o) const;

 private:
  AlgebraicNumber(IntPolynomial p, double approx, double radius)
      : minpoly_(std::move(p)), approx_(approx), radius_(radius) {}

  IntPolynomial minpoly_;
  double approx_ = 0.0;
  double radius_ = 0.5;
};

/// Parses "omega", "-omega", or an integer literal into a built-in constant.
std::optional<AlgebraicNumber> named_constant(const std::string& name);

}  // namespace vtypes
