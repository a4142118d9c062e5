#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace vtypes {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact conversion of a finite double to a rational.
Rational to_rational(double x);

}  // namespace vtypes
