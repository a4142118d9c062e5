#include "vtypes/algebraic.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "vtypes/error.hpp"

namespace vtypes {

namespace {

bool is_perfect_square(const BigInt& d) {
  if (d < 0) return false;
  BigInt r = boost::multiprecision::sqrt(d);
  return r * r == d;
}

}  // namespace

AlgebraicNumber AlgebraicNumber::make(IntPolynomial minpoly, double approx, double isolation_radius) {
  if (minpoly.degree() < 1) throw DomainError("minimal polynomial must have degree >= 1");
  if (!minpoly.is_monic()) throw DomainError("minimal polynomial must be monic: " + minpoly.to_string());
  if (!std::isfinite(approx) || !(isolation_radius > 0.0) || !std::isfinite(isolation_radius)) {
    throw DomainError("approximation and isolation radius must be finite, radius > 0");
  }
  if (minpoly.degree() == 2) {
    const auto& c = minpoly.coefficients();
    BigInt disc = c[1] * c[1] - 4 * c[0];
    if (is_perfect_square(disc)) {
      throw DomainError("quadratic " + minpoly.to_string() + " is reducible over the rationals");
    }
  }
  const Rational lo = to_rational(approx - isolation_radius);
  const Rational hi = to_rational(approx + isolation_radius);
  const int roots = count_real_roots(minpoly, lo, hi);
  if (roots != 1) {
    std::ostringstream msg;
    msg << minpoly.to_string() << " has " << roots << " real roots within " << isolation_radius
        << " of " << approx;
    throw DomainError(msg.str());
  }
  // tighten the approximation onto the isolated root
  Rational a = lo, b = hi;
  for (int step = 0; step < 60; ++step) {
    const Rational mid = (a + b) / 2;
    if (count_real_roots(minpoly, a, mid) == 1) b = mid;
    else a = mid;
  }
  approx = ((a + b) / 2).convert_to<double>();
  return AlgebraicNumber(std::move(minpoly), approx, isolation_radius);
}

AlgebraicNumber AlgebraicNumber::integer(long long k) {
  return AlgebraicNumber(IntPolynomial::linear(BigInt(k)), static_cast<double>(k), 0.5);
}

const AlgebraicNumber& AlgebraicNumber::zero() {
  static const AlgebraicNumber z = integer(0);
  return z;
}

const AlgebraicNumber& AlgebraicNumber::minus_one() {
  static const AlgebraicNumber m = integer(-1);
  return m;
}

const AlgebraicNumber& AlgebraicNumber::omega() {
  static const AlgebraicNumber w = make(IntPolynomial{-1, 1, 1}, (std::sqrt(5.0) - 1.0) / 2.0, 0.5);
  return w;
}

const AlgebraicNumber& AlgebraicNumber::minus_omega() {
  static const AlgebraicNumber w = omega().negated();
  return w;
}

std::optional<BigInt> AlgebraicNumber::as_integer() const {
  if (!is_rational()) return std::nullopt;
  return -minpoly_.coefficient(0);
}

AlgebraicNumber AlgebraicNumber::negated() const {
  return AlgebraicNumber(minpoly_.reflected(), -approx_, radius_);
}

std::string AlgebraicNumber::describe() const {
  if (auto k = as_integer()) return k->str();
  if (*this == omega()) return "omega";
  if (*this == minus_omega()) return "-omega";
  std::ostringstream out;
  out.precision(12);
  out << "root of " << minpoly_.to_string() << " near " << approx_;
  return out.str();
}

bool AlgebraicNumber::operator==(const AlgebraicNumber& o) const {
  return minpoly_ == o.minpoly_ && std::abs(approx_ - o.approx_) < std::min(radius_, o.radius_);
}

std::optional<AlgebraicNumber> named_constant(const std::string& name) {
  if (name == "omega") return AlgebraicNumber::omega();
  if (name == "-omega") return AlgebraicNumber::minus_omega();
  if (name.empty()) return std::nullopt;
  std::size_t i = (name[0] == '-' || name[0] == '+') ? 1 : 0;
  if (i == name.size()) return std::nullopt;
  for (std::size_t k = i; k < name.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(name[k]))) return std::nullopt;
  return AlgebraicNumber::integer(std::stoll(name));
}

}  // namespace vtypes
