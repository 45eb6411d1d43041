#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace sltk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p" or a decimal literal such as "0.125" exactly.
/// Throws InputError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// The exact binary value of a finite double.
Rational rational_from_double(double x);

/// Always "p/q" with q > 0 and gcd(p,q) = 1, e.g. "3/1", "-1/8".
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

BigInt lcm_of_denominators(const std::vector<Rational>& values);

}  // namespace sltk
