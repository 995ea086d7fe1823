#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace kc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", an integer, or a decimal literal with optional exponent
/// ("0.25", "-3e-2") into an exact rational. Throws Error(MalformedInput).
Rational parse_rational(std::string_view text);

/// "p/q" form, or just "p" when the denominator is one.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact rational value of a finite double.
Rational exact_rational(double v);

}  // namespace kc
