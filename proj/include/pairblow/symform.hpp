#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pairblow/rational.hpp"

namespace pairblow {

/// Polynomial with rational coefficients in named integer symbols
/// (|eta| = "n", k, the C-degree d, c = integral of c1(X) over C, ...).
///
/// Class coordinates and c1 pairings are SymForms; the only product the
/// catalogue ever produces is d*c.
class SymForm {
 public:
  /// Sorted symbol names, repeated for powers. Empty = constant monomial.
  using Monomial = std::vector<std::string>;
  using Terms = std::map<Monomial, Rational>;

  SymForm() = default;
  SymForm(long long value);  // NOLINT: integers convert implicitly
  SymForm(const Rational& value);  // NOLINT
  explicit SymForm(Terms terms);

  static SymForm symbol(std::string name);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Pre: is_constant().
  Rational constant_value() const;
  Rational coefficient(const Monomial& m) const;
  /// Distinct symbol names occurring anywhere.
  std::vector<std::string> symbols() const;

  /// Replaces every occurrence of `name` by `value`.
  SymForm substitute(const std::string& name, const SymForm& value) const;
  /// Full evaluation. Throws InvalidModel if a symbol is unbound.
  Rational evaluate(const std::map<std::string, Rational>& bindings) const;

  friend SymForm operator+(const SymForm& a, const SymForm& b);
  friend SymForm operator-(const SymForm& a, const SymForm& b);
  friend SymForm operator-(const SymForm& a);
  friend SymForm operator*(const SymForm& a, const SymForm& b);
  friend bool operator==(const SymForm& a, const SymForm& b) = default;

 private:
  void prune();
  Terms terms_;
};

/// "2*k + 4*n", "-1 + 1*c*d", "0". Constant first, then monomials in
/// lexicographic order; every nonconstant term carries an explicit
/// coefficient.
std::string to_string(const SymForm& f);
SymForm parse_symform(std::string_view text);

}  // namespace pairblow
