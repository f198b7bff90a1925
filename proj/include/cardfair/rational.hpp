#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cardfair {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction with arbitrary-precision numerator and positive
// denominator, always kept in lowest terms by the backend.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or a bare integer "p". Throws DomainError on malformed
/// input or non-positive denominator.
Rational parse_rational(const std::string& text);

/// Renders as "p/q", denominator always present ("0/1", "-2/3").
std::string rational_to_string(const Rational& value);

double rational_to_double(const Rational& value);

}  // namespace cardfair
