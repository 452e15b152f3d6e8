#pragma once

#include <map>
#include <string>
#include <string_view>

#include "pairblow/rational.hpp"

namespace pairblow {

/// Finite Laurent polynomial in q with exact rational coefficients.
///
/// Stored sparsely as exponent -> coefficient; no stored coefficient is ever
/// zero, so structural equality is coefficient-wise equality.
class QLaurent {
 public:
  using Terms = std::map<int, Rational>;

  QLaurent() = default;
  explicit QLaurent(Terms terms);

  static QLaurent constant(const Rational& c);
  static QLaurent monomial(const Rational& c, int exponent);
  /// The variable q itself.
  static QLaurent q();

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Rational coefficient(int exponent) const;
  // Pre: !is_zero().
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  QLaurent pow(unsigned exponent) const;

  friend QLaurent operator+(const QLaurent& a, const QLaurent& b);
  friend QLaurent operator-(const QLaurent& a, const QLaurent& b);
  friend QLaurent operator-(const QLaurent& a);
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend bool operator==(const QLaurent& a, const QLaurent& b) = default;

 private:
  void prune();

  Terms terms_;
};

QLaurent add(const QLaurent& a, const QLaurent& b);
QLaurent mul(const QLaurent& a, const QLaurent& b);
QLaurent scale(const Rational& c, const QLaurent& a);

/// Exact quotient in Q[q, 1/q]. Throws DivisionByZero when b == 0 and
/// NonExactDivision when b does not divide a.
QLaurent divide_exact(const QLaurent& a, const QLaurent& b);

/// Canonical text: "c*q^k" terms, exponents ascending, joined by " + ";
/// the zero polynomial renders as "0". Example: "1/2*q^1 + -1/2*q^3".
std::string to_string(const QLaurent& a);

/// Inverse of to_string. Also accepts like terms in any order and arbitrary
/// spacing around '+'. Throws ParseError.
QLaurent parse_qlaurent(std::string_view text);

}  // namespace pairblow
