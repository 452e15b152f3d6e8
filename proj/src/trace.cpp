#include "pairblow/trace.hpp"

#include <sstream>

#include "pairblow/dimsolve.hpp"
#include "pairblow/errors.hpp"

namespace pairblow {

nlohmann::json to_json(const DerivationTrace& t) {
  return {{"theorem", t.theorem},
          {"params", t.params},
          {"gates", t.gates},
          {"identities", t.identities},
          {"ratio", t.ratio},
          {"result", t.result ? nlohmann::json(*t.result) : nlohmann::json(nullptr)},
          {"expected", t.expected},
          {"stated_formula", t.stated_formula},
          {"status", t.status},
          {"messages", t.messages}};
}

DerivationTrace trace_from_json(const nlohmann::json& j) {
  try {
    DerivationTrace t;
    t.theorem = j.at("theorem").get<std::string>();
    t.params = j.at("params");
    t.gates = j.at("gates");
    t.identities = j.at("identities");
    t.ratio = j.at("ratio");
    if (!j.at("result").is_null()) t.result = j.at("result").get<std::string>();
    t.expected = j.at("expected").get<std::string>();
    t.stated_formula = j.at("stated_formula").get<std::string>();
    t.status = j.at("status").get<int>();
    t.messages = j.at("messages").get<std::vector<std::string>>();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("trace JSON: ") + e.what());
  }
}

std::string render_text(const DerivationTrace& t) {
  std::ostringstream out;
  out << "theorem " << t.theorem << "\n";
  out << "statement: " << t.stated_formula << "\n";
  out << "params: " << t.params.dump() << "\n";
  for (const auto& g : t.gates) {
    const GateProblem p = gate_from_json(g.at("problem"));
    const GateCertificate c = certificate_from_json(g.at("certificate"), p.surface);
    out << render_text(p, c);
    for (const auto& f : g.at("audit")) out << "  audit failure: " << f.get<std::string>() << "\n";
  }
  for (const auto& id : t.identities) {
    out << "identity " << id.at("name").get<std::string>() << ": " << id.at("lhs").get<std::string>() << " =";
    if (id.at("terms").empty()) out << " 0";
    bool first = true;
    for (const auto& term : id.at("terms")) {
      out << (first ? " " : "\n    + ") << "(" << term.at("coefficient").get<std::string>() << ") * "
          << term.at("small").get<std::string>() << " * " << term.at("large").get<std::string>();
      if (!term.at("d").is_null()) out << "  [d=" << term.at("d").dump() << "]";
      first = false;
    }
    out << "\n";
  }
  if (!t.ratio.is_null()) {
    for (const char* form : {"relative", "absolute"}) {
      const auto& f = t.ratio.at(form);
      if (f.is_null()) continue;
      out << "ratio (" << form << "): (" << f.at("factor").get<std::string>() << ") * "
          << f.at("num").get<std::string>() << " / " << f.at("den").get<std::string>() << "\n";
    }
  }
  for (const auto& m : t.messages) out << "note: " << m << "\n";
  out << "result: " << (t.result ? *t.result : std::string("none")) << "\n";
  out << "expected: " << t.expected << "\n";
  out << "status: " << t.status << (t.status == 0 ? " (verified)" : " (mismatch)") << "\n";
  return out.str();
}

}  // namespace pairblow
