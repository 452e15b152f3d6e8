#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pairblow {

/// Arbitrary-precision exact rational. Expression templates are off so that
/// arithmetic results are plain values.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Renders as "p" or "p/r" in lowest terms, sign on the numerator.
std::string to_string(const Rational& value);

/// Parses the form produced by to_string (optional leading '-', digits,
/// optional "/digits" with nonzero denominator). Throws ParseError.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& value);

/// Pre: is_integer(value) and the value fits in a long long.
long long to_integer(const Rational& value);

}  // namespace pairblow
