#include "pairblow/symform.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "pairblow/errors.hpp"

namespace pairblow {

SymForm::SymForm(long long value) : SymForm(Rational(value)) {}

SymForm::SymForm(const Rational& value) {
  if (value != 0) terms_[{}] = value;
}

SymForm::SymForm(Terms terms) : terms_(std::move(terms)) { prune(); }

SymForm SymForm::symbol(std::string name) {
  return SymForm(Terms{{Monomial{std::move(name)}, Rational(1)}});
}

void SymForm::prune() { std::erase_if(terms_, [](const auto& t) { return t.second == 0; }); }

bool SymForm::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational SymForm::constant_value() const { return coefficient({}); }

Rational SymForm::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::string> SymForm::symbols() const {
  std::set<std::string> names;
  for (const auto& [m, c] : terms_) names.insert(m.begin(), m.end());
  return {names.begin(), names.end()};
}

SymForm SymForm::substitute(const std::string& name, const SymForm& value) const {
  SymForm out;
  for (const auto& [m, c] : terms_) {
    SymForm term(c);
    for (const auto& s : m) term = term * (s == name ? value : symbol(s));
    out = out + term;
  }
  return out;
}

Rational SymForm::evaluate(const std::map<std::string, Rational>& bindings) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& s : m) {
      const auto it = bindings.find(s);
      if (it == bindings.end()) throw InvalidModel("unbound symbol '" + s + "'");
      term *= it->second;
    }
    total += term;
  }
  return total;
}

SymForm operator+(const SymForm& a, const SymForm& b) {
  SymForm::Terms out = a.terms_;
  for (const auto& [m, c] : b.terms_) out[m] += c;
  return SymForm(std::move(out));
}

SymForm operator-(const SymForm& a) {
  SymForm::Terms out = a.terms_;
  for (auto& [m, c] : out) c = -c;
  return SymForm(std::move(out));
}

SymForm operator-(const SymForm& a, const SymForm& b) { return a + (-b); }

SymForm operator*(const SymForm& a, const SymForm& b) {
  SymForm::Terms out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      SymForm::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      out[m] += ca * cb;
    }
  }
  return SymForm(std::move(out));
}

std::string to_string(const SymForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    for (const auto& s : m) out += "*" + s;
  }
  return out;
}

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s.front())) || s.front() == '_')) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\n");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\n") - first + 1);
}

}  // namespace

SymForm parse_symform(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty symbolic form");
  SymForm out;
  std::size_t start = 0;
  while (true) {
    const auto plus = body.find('+', start);
    std::string_view term =
        trim(body.substr(start, plus == std::string_view::npos ? plus : plus - start));
    if (term.empty()) throw ParseError("empty term in '" + std::string(text) + "'");
    SymForm product(1LL);
    bool first = true;
    std::size_t pos = 0;
    while (pos <= term.size()) {
      const auto star = term.find('*', pos);
      const std::string_view factor =
          trim(term.substr(pos, star == std::string_view::npos ? star : star - pos));
      if (is_identifier(factor)) {
        product = product * SymForm::symbol(std::string(factor));
      } else if (first) {
        product = product * SymForm(parse_rational(factor));
      } else {
        throw ParseError("bad factor '" + std::string(factor) + "' in '" + std::string(text) + "'");
      }
      first = false;
      if (star == std::string_view::npos) break;
      pos = star + 1;
    }
    out = out + product;
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return out;
}

}  // namespace pairblow
