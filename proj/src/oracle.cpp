#include "pairblow/oracle.hpp"

#include <fstream>

#include "pairblow/errors.hpp"
#include "pairblow/geomcat.hpp"

namespace pairblow {

OracleTable::OracleTable(std::vector<OracleEntry> entries) : entries_(std::move(entries)) {}

const OracleEntry* OracleTable::find(const std::string& symbol) const {
  for (const auto& e : entries_) {
    if (e.symbol == symbol) return &e;
  }
  return nullptr;
}

namespace {

nlohmann::json fiber_rule(std::string_view geometry, std::vector<int> coords) {
  return {{"rule", "genus0_fiber"}, {"geometry", geometry}, {"class", coords}};
}

}  // namespace

OracleTable default_oracle_table() {
  const QLaurent q = QLaurent::q();
  const QLaurent one = QLaurent::constant(1);
  const QLaurent half = QLaurent::constant(Rational(1, 2));
  const std::string localization = "equivariant virtual localization (Graber-Pandharipande)";
  const std::string degenerate = "degenerate contribution of a smooth rational curve (Pandharipande-Thomas)";
  return OracleTable({
      {"Z(P3;tau0(pt)*tau0(pt))_{L}", q * (one + q).pow(2), localization + "; " + degenerate,
       fiber_rule(kP3, {1})},
      {"Z(P3_blown;tau0(pt))_{F}", q, localization + "; " + degenerate, fiber_rule(kP3Blown, {1, 0})},
      {"Z(P3;tau0(L)*tau1(pt))_{L}", half * q * (one - q.pow(2)), localization, std::nullopt},
      {"Z(P3_blown;tau0(E2neg)*tau0(L))_{F}", q, localization, std::nullopt},
      {"Z(bundle_over_C/Dinf;tau0(C)|(1,pt))_{F}", q * (one + q), degenerate, fiber_rule(kBundleOverC, {1, 0})},
      {"Z(bundle_over_E/Dinf;tau0(E)|(1,pt))_{F}", q, degenerate, fiber_rule(kBundleOverE, {1, 0, 0})},
  });
}

OracleTable oracle_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("oracle table must be a JSON array");
  std::vector<OracleEntry> entries;
  try {
    for (const auto& e : j) {
      OracleEntry entry{e.at("symbol").get<std::string>(), parse_qlaurent(e.at("value").get<std::string>()),
                        e.at("provenance").get<std::string>(), std::nullopt};
      if (e.contains("cross_check") && !e.at("cross_check").is_null()) entry.cross_check = e.at("cross_check");
      entries.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("oracle table: ") + ex.what());
  }
  return OracleTable(std::move(entries));
}

nlohmann::json to_json(const OracleTable& table) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : table.entries()) {
    nlohmann::json j{{"symbol", e.symbol}, {"value", to_string(e.value)}, {"provenance", e.provenance}};
    if (e.cross_check) j["cross_check"] = *e.cross_check;
    out.push_back(j);
  }
  return out;
}

OracleTable load_oracle_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open oracle table " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError("oracle table " + path + ": " + ex.what());
  }
  return oracle_from_json(j);
}

std::vector<CrossCheck> cross_check(const OracleTable& table) {
  std::vector<CrossCheck> out;
  for (const auto& e : table.entries()) {
    if (!e.cross_check) continue;
    const auto& rule = *e.cross_check;
    try {
      if (rule.at("rule") != "genus0_fiber") throw ParseError("unknown cross-check rule " + rule.at("rule").dump());
      const auto g = catalogue(rule.at("geometry").get<std::string>());
      std::vector<SymForm> coords;
      for (int v : rule.at("class").get<std::vector<int>>()) coords.emplace_back(static_cast<long long>(v));
      const SymForm c1 = c1_pair(*g, make_class(g, std::move(coords)));
      if (!c1.is_constant() || !is_integer(c1.constant_value()) || c1.constant_value() < 2) {
        throw InvalidModel("cross-check class for " + e.symbol + " needs c1 >= 2");
      }
      const auto exponent = static_cast<unsigned>(to_integer(c1.constant_value()) - 2);
      const QLaurent derived = QLaurent::q() * (QLaurent::constant(1) + QLaurent::q()).pow(exponent);
      out.push_back({e.symbol, derived, e.value});
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError("cross-check for " + e.symbol + ": " + ex.what());
    }
  }
  return out;
}

}  // namespace pairblow
