#include "pairblow/qlaurent.hpp"

#include <vector>

#include "pairblow/errors.hpp"

namespace pairblow {

QLaurent::QLaurent(Terms terms) : terms_(std::move(terms)) { prune(); }

QLaurent QLaurent::constant(const Rational& c) { return monomial(c, 0); }

QLaurent QLaurent::monomial(const Rational& c, int exponent) {
  return QLaurent(Terms{{exponent, c}});
}

QLaurent QLaurent::q() { return monomial(Rational(1), 1); }

Rational QLaurent::coefficient(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QLaurent::prune() { std::erase_if(terms_, [](const auto& t) { return t.second == 0; }); }

QLaurent QLaurent::pow(unsigned exponent) const {
  QLaurent result = constant(Rational(1));
  QLaurent base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result = result * base;
    base = base * base;
    exponent >>= 1u;
  }
  return result;
}

QLaurent operator+(const QLaurent& a, const QLaurent& b) {
  QLaurent::Terms out = a.terms_;
  for (const auto& [e, c] : b.terms_) out[e] += c;
  return QLaurent(std::move(out));
}

QLaurent operator-(const QLaurent& a) {
  QLaurent::Terms out = a.terms_;
  for (auto& [e, c] : out) c = -c;
  return QLaurent(std::move(out));
}

QLaurent operator-(const QLaurent& a, const QLaurent& b) { return a + (-b); }

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent::Terms out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out[ea + eb] += ca * cb;
  }
  return QLaurent(std::move(out));
}

QLaurent add(const QLaurent& a, const QLaurent& b) { return a + b; }
QLaurent mul(const QLaurent& a, const QLaurent& b) { return a * b; }

QLaurent scale(const Rational& c, const QLaurent& a) {
  return QLaurent::constant(c) * a;
}

namespace {

// Dense coefficients of q^{-min_exponent} * a, constant term first.
std::vector<Rational> dense(const QLaurent& a) {
  std::vector<Rational> out(a.max_exponent() - a.min_exponent() + 1);
  for (const auto& [e, c] : a.terms()) out[e - a.min_exponent()] = c;
  return out;
}

}  // namespace

QLaurent divide_exact(const QLaurent& a, const QLaurent& b) {
  if (b.is_zero()) throw DivisionByZero("divide_exact: divisor is zero");
  if (a.is_zero()) return {};

  // a = q^la A(q), b = q^lb B(q) with A(0), B(0) nonzero; divide in Q[q].
  std::vector<Rational> rem = dense(a);
  const std::vector<Rational> den = dense(b);
  if (rem.size() < den.size()) {
    throw NonExactDivision("divide_exact: " + to_string(b) + " does not divide " +
                           to_string(a));
  }
  const std::size_t qlen = rem.size() - den.size() + 1;
  std::vector<Rational> quot(qlen);
  for (std::size_t i = qlen; i-- > 0;) {
    const Rational factor = rem[i + den.size() - 1] / den.back();
    quot[i] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= factor * den[j];
  }
  for (const auto& r : rem) {
    if (r != 0) {
      throw NonExactDivision("divide_exact: " + to_string(b) + " does not divide " +
                             to_string(a));
    }
  }
  QLaurent::Terms out;
  const int shift = a.min_exponent() - b.min_exponent();
  for (std::size_t i = 0; i < qlen; ++i) out[shift + static_cast<int>(i)] = quot[i];
  return QLaurent(std::move(out));
}

std::string to_string(const QLaurent& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*q^" + std::to_string(e);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\n");
  return s.substr(first, last - first + 1);
}

int parse_exponent(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos ||
      digits.size() > 9) {
    throw ParseError("bad exponent in '" + std::string(whole) + "'");
  }
  return std::stoi(std::string(s));
}

}  // namespace

QLaurent parse_qlaurent(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty Laurent polynomial");
  if (body == "0") return {};
  QLaurent::Terms terms;
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto plus = body.find('+', start);
    const std::string_view term =
        trim(body.substr(start, plus == std::string_view::npos ? plus : plus - start));
    const auto star = term.find("*q^");
    if (term.empty() || star == std::string_view::npos) {
      throw ParseError("bad term '" + std::string(term) + "' in '" + std::string(text) + "'");
    }
    const Rational c = parse_rational(term.substr(0, star));
    const int e = parse_exponent(term.substr(star + 3), text);
    terms[e] += c;
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return QLaurent(std::move(terms));
}

}  // namespace pairblow
