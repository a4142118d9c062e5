#include "vtypes/polynomial.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "vtypes/error.hpp"

namespace vtypes {

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw DomainError("cannot convert a non-finite value to a rational");
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, 0.5 <= |mant| < 1
  // 53 mantissa bits fit exactly in a 64-bit integer
  auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  BigInt num = scaled;
  BigInt den = 1;
  if (exp >= 0) {
    num <<= exp;
  } else {
    den <<= -exp;
  }
  return Rational(num, den);
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (auto c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::linear(const BigInt& root) { return IntPolynomial({-root, BigInt{1}}); }

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::eval(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double IntPolynomial::eval(double t) const {
  long double acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * t + it->convert_to<long double>();
  return static_cast<double>(acc);
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long long>(k);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::reflected() const {
  std::vector<BigInt> c = coeffs_;
  const int deg = degree();
  for (std::size_t k = 0; k < c.size(); ++k) {
    // coefficient of x^k in (-1)^deg p(-x) picks up (-1)^(deg + k)
    if ((deg + static_cast<int>(k)) % 2 != 0) c[k] = -c[k];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) out << mag;
    if (k >= 1) out << 'x';
    if (k >= 2) out << '^' << k;
    first = false;
  }
  return out.str();
}

PolynomialDivision divide_monic(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  if (!divisor.is_monic()) {
    throw DomainError("divisor must be monic: " + divisor.to_string());
  }
  std::vector<BigInt> rem = dividend.coefficients();
  const int dd = divisor.degree();
  const int pd = dividend.degree();
  if (pd < dd) return {IntPolynomial{}, dividend};
  std::vector<BigInt> quot(static_cast<std::size_t>(pd - dd + 1));
  const auto& dc = divisor.coefficients();
  for (int k = pd; k >= dd; --k) {
    BigInt q = rem[static_cast<std::size_t>(k)];
    quot[static_cast<std::size_t>(k - dd)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= q * dc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial parse_coefficients(const std::string& text) {
  std::vector<BigInt> c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t a = tok.find_first_not_of(" \t");
    std::size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw DomainError("bad token '' in coefficient list '" + text + "'");
    tok = tok.substr(a, b - a + 1);
    if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
    bool ok = !tok.empty();
    for (std::size_t i = 0; i < tok.size(); ++i)
      if (!(std::isdigit(static_cast<unsigned char>(tok[i])) || (i == 0 && tok[i] == '-' && tok.size() > 1)))
        ok = false;
    if (!ok) throw DomainError("bad token '" + tok + "' in coefficient list '" + text + "'");
    c.emplace_back(tok);
  }
  IntPolynomial p(std::move(c));
  if (p.is_zero()) throw DomainError("coefficient list '" + text + "' is the zero polynomial");
  return p;
}

namespace {

using RatPoly = std::vector<Rational>;  // constant first, no trailing zeros

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly remainder(RatPoly a, const RatPoly& b) {
  const auto db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    Rational q = a.back() / b.back();
    const auto shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= q * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign_at(const RatPoly& p, const Rational& t) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

int sign_changes(const std::vector<RatPoly>& chain, const Rational& t) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw DomainError("count_real_roots of the zero polynomial");
  if (lo > hi) return 0;
  RatPoly p0;
  for (const auto& c : p.coefficients()) p0.emplace_back(c);

  // Endpoint roots are divided out so that the Sturm count sees none.
  int count = 0;
  for (const Rational& t : {lo, hi}) {
    if (p0.size() > 1 && sign_at(p0, t) == 0) {
      RatPoly q(p0.size() - 1);
      Rational carry = 0;
      for (std::size_t k = p0.size() - 1; k >= 1; --k) {
        carry = p0[k] + carry * t;
        q[k - 1] = carry;
      }
      p0 = std::move(q);
      ++count;
    }
    if (lo == hi) break;
  }
  if (p0.size() <= 1) return count;

  std::vector<RatPoly> chain{p0};
  RatPoly p1;
  for (std::size_t k = 1; k < p0.size(); ++k) p1.push_back(p0[k] * static_cast<long long>(k));
  trim(p1);
  chain.push_back(p1);
  while (chain.back().size() > 1) {
    RatPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return count + sign_changes(chain, lo) - sign_changes(chain, hi);
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt g = 0;
  for (const auto& c : p.coefficients()) g = boost::multiprecision::gcd(g, c);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> c = p.coefficients();
  for (auto& x : c) x /= g;
  return IntPolynomial(std::move(c));
}

IntPolynomial polynomial_gcd(const IntPolynomial& a0, const IntPolynomial& b0) {
  IntPolynomial a = primitive_part(a0);
  IntPolynomial b = primitive_part(b0);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    // pseudo-remainder of a by b, one leading term at a time
    std::vector<BigInt> r = a.coefficients();
    const auto& bc = b.coefficients();
    const BigInt& lb = bc.back();
    const int db = b.degree();
    int dr = a.degree();
    while (dr >= db) {
      const BigInt lr = r[static_cast<std::size_t>(dr)];
      for (auto& x : r) x *= lb;
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(dr - db + j)] -= lr * bc[static_cast<std::size_t>(j)];
      r.pop_back();
      while (!r.empty() && r.back() == 0) r.pop_back();
      dr = static_cast<int>(r.size()) - 1;
    }
    a = std::move(b);
    b = primitive_part(IntPolynomial(std::move(r)));
  }
  return a;
}

std::size_t isolated_root_multiplicity(const IntPolynomial& p, const IntPolynomial& host, const Rational& lo,
                                       const Rational& hi) {
  if (count_real_roots(host, lo, hi) != 1) throw DomainError("interval does not isolate a single root");
  std::size_t k = 0;
  IntPolynomial q = p;
  while (!q.is_zero()) {
    const IntPolynomial g = polynomial_gcd(host, q);
    if (g.degree() < 1 || count_real_roots(g, lo, hi) == 0) break;
    ++k;
    q = q.derivative();
  }
  return k;
}

}  // namespace vtypes
