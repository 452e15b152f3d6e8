#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pairblow/qlaurent.hpp"

namespace pairblow {

struct OracleEntry {
  std::string symbol;  // RelPFSymbol::canonical()
  QLaurent value;
  std::string provenance;
  /// {"rule": "genus0_fiber", "geometry": name, "class": [coords]}: the
  /// value should be q(1+q)^(c1.beta - 2).
  std::optional<nlohmann::json> cross_check;
};

class OracleTable {
 public:
  OracleTable() = default;
  explicit OracleTable(std::vector<OracleEntry> entries);

  const std::vector<OracleEntry>& entries() const { return entries_; }
  const OracleEntry* find(const std::string& symbol) const;

 private:
  std::vector<OracleEntry> entries_;
};

/// The six leaf values the blow-up pipelines consume.
OracleTable default_oracle_table();

/// Throws ParseError on malformed JSON or values.
OracleTable oracle_from_json(const nlohmann::json& j);
nlohmann::json to_json(const OracleTable& table);
OracleTable load_oracle_table(const std::string& path);

struct CrossCheck {
  std::string symbol;
  QLaurent derived;
  QLaurent stored;
  bool ok() const { return derived == stored; }
};

/// Re-derives every entry carrying a cross_check rule.
std::vector<CrossCheck> cross_check(const OracleTable& table);

}  // namespace pairblow
