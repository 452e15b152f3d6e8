#include "pairblow/rational.hpp"

#include <cctype>

#include "pairblow/errors.hpp"

namespace pairblow {

std::string to_string(const Rational& value) { return value.str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  if (slash != std::string_view::npos &&
      den.find_first_not_of('0') == std::string_view::npos) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(std::string(text));
}

bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

long long to_integer(const Rational& value) {
  return boost::multiprecision::numerator(value).convert_to<long long>();
}

}  // namespace pairblow
