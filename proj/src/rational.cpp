#include "cardfair/rational.hpp"

#include <stdexcept>

#include "cardfair/errors.hpp"

namespace cardfair {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den <= 0) {
      throw DomainError("rational denominator must be positive: " + text);
    }
    return Rational(num, den);
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw DomainError("malformed rational: " + text);
  }
}

std::string rational_to_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

double rational_to_double(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace cardfair
