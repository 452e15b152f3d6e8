#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace pairblow {

/// Everything a verification run derived, in serializable form.
///
/// gates: [{identity, problem, certificate, audit}], identities: as produced
/// by to_json(SymbolicIdentity), ratio: to_json(RatioResult) plus
/// "form_used", or null.
struct DerivationTrace {
  std::string theorem;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json gates = nlohmann::json::array();
  nlohmann::json identities = nlohmann::json::array();
  nlohmann::json ratio = nullptr;
  std::optional<std::string> result;
  std::string expected;
  std::string stated_formula;
  int status = 0;
  std::vector<std::string> messages;

  friend bool operator==(const DerivationTrace&, const DerivationTrace&) = default;
};

nlohmann::json to_json(const DerivationTrace& t);
/// Throws ParseError.
DerivationTrace trace_from_json(const nlohmann::json& j);
std::string render_text(const DerivationTrace& t);

}  // namespace pairblow
