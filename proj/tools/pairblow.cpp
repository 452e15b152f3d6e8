// pairblow: verify blow-up formulas, solve dimension gates, inspect oracles.
//
// Exit codes: 0 verified, 1 derivation mismatch, 2 invalid input.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pairblow/dimsolve.hpp"
#include "pairblow/errors.hpp"
#include "pairblow/geomcat.hpp"
#include "pairblow/oracle.hpp"
#include "pairblow/verify.hpp"

namespace {

using namespace pairblow;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_k_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    std::size_t pos = 0;
    if (dots == std::string::npos) {
      const int k = std::stoi(text, &pos);
      if (pos != text.size()) throw InputError("");
      return {k, k};
    }
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    const int a = std::stoi(lo, &pos);
    if (pos != lo.size()) throw InputError("");
    const int b = std::stoi(hi, &pos);
    if (pos != hi.size()) throw InputError("");
    return {a, b};
  } catch (const std::exception&) {
    throw InputError("--k expects N or A..B, got '" + text + "'");
  }
}

OracleTable resolve_table(const std::string& flag) {
  if (!flag.empty()) return load_oracle_table(flag);
  if (const char* env = std::getenv("PAIRBLOW_ORACLE"); env && *env) return load_oracle_table(env);
  return default_oracle_table();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic degeneration-formula engine for stable pair invariants of blow-ups"};
  app.require_subcommand(1);

  std::string format = "text", out_path, theorem, k_text = "1..5", gate_file, table_path, oracle_action;
  std::optional<int> c_bound;
  int enum_bound = 6;
  bool all = false;

  auto* verify_cmd = app.add_subcommand("verify", "Re-derive a blow-up formula or lemma");
  verify_cmd->add_option("--theorem", theorem, "pt0 pt1 pt2 pt3 curve0 curve1 curve2 lemma3.1 ... lemma4.4");
  verify_cmd->add_flag("--all", all, "Verify every id, output ordered by id");
  verify_cmd->add_option("--k", k_text, "k range for pt0/curve0, N or A..B")->capture_default_str();
  verify_cmd->add_option("--c-bound", c_bound, "Lower bound c0 on the integral of c1(X) over C");
  verify_cmd->add_option("--table", table_path, "Oracle table JSON (default: $PAIRBLOW_ORACLE or built-in)");

  auto* gate_cmd = app.add_subcommand("solve-gate", "Solve a gate problem given as JSON");
  gate_cmd->add_option("file", gate_file, "Gate problem JSON")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Inspect the oracle table");
  oracle_cmd->add_option("action", oracle_action, "list | check")->required()->check(CLI::IsMember({"list", "check"}));
  oracle_cmd->add_option("--table", table_path, "Oracle table JSON (default: $PAIRBLOW_ORACLE or built-in)");

  auto* cat_cmd = app.add_subcommand("catalogue", "Dump the geometry catalogue as JSON");

  for (auto* cmd : {verify_cmd, gate_cmd, oracle_cmd, cat_cmd}) {
    cmd->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    cmd->add_option("--out", out_path, "Write output to PATH instead of stdout");
  }
  for (auto* cmd : {verify_cmd, gate_cmd}) {
    cmd->add_option("--enum-bound", enum_bound, "Largest |eta| enumerated exhaustively")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const bool json = format == "json";
  try {
    if (*verify_cmd) {
      if (all == !theorem.empty()) throw InputError("verify needs exactly one of --theorem ID or --all");
      const OracleTable table = resolve_table(table_path);
      RunConfig base{.theorem = theorem, .k_range = parse_k_range(k_text), .c_bound = c_bound, .enum_bound = enum_bound};
      std::vector<std::string> ids = all ? theorem_ids() : std::vector<std::string>{theorem};
      std::vector<std::future<DerivationTrace>> jobs;
      for (const auto& id : ids) {
        RunConfig cfg = base;
        cfg.theorem = id;
        jobs.push_back(std::async(std::launch::async, [cfg, &table] { return verify(cfg, table); }));
      }
      int status = 0;
      nlohmann::json traces = nlohmann::json::array();
      std::string text;
      for (auto& job : jobs) {
        const DerivationTrace t = job.get();
        status = std::max(status, t.status);
        traces.push_back(to_json(t));
        text += render_text(t) + (all ? "\n" : "");
      }
      if (json) {
        emit((all ? traces : traces.front()).dump(2) + "\n", out_path);
      } else {
        emit(text, out_path);
      }
      return status;
    }

    if (*gate_cmd) {
      const GateProblem problem = gate_from_json(read_json_file(gate_file));
      GateCertificate cert;
      try {
        cert = solve_gate(problem, enum_bound);
      } catch (const DominanceFails& e) {
        std::cerr << "refusing to certify: " << e.what() << "\n";
        return 1;
      }
      const auto audit = check_certificate(problem, cert);
      if (json) {
        emit(nlohmann::json{{"problem", to_json(problem)}, {"certificate", to_json(cert)}, {"audit", audit}}.dump(2) + "\n",
             out_path);
      } else {
        std::string text = render_text(problem, cert);
        for (const auto& f : audit) text += "  audit failure: " + f + "\n";
        emit(text, out_path);
      }
      return audit.empty() ? 0 : 1;
    }

    if (*oracle_cmd) {
      const OracleTable table = resolve_table(table_path);
      if (oracle_action == "list") {
        if (json) {
          emit(to_json(table).dump(2) + "\n", out_path);
        } else {
          std::ostringstream text;
          for (const auto& e : table.entries()) {
            text << e.symbol << " = " << to_string(e.value) << "\n    source: " << e.provenance << "\n";
          }
          emit(text.str(), out_path);
        }
        return 0;
      }
      const auto checks = cross_check(table);
      int status = 0;
      nlohmann::json report = nlohmann::json::array();
      std::ostringstream text;
      for (const auto& c : checks) {
        if (!c.ok()) status = 1;
        report.push_back({{"symbol", c.symbol},
                          {"derived", to_string(c.derived)},
                          {"stored", to_string(c.stored)},
                          {"ok", c.ok()}});
        text << (c.ok() ? "ok       " : "MISMATCH ") << c.symbol << ": derived " << to_string(c.derived)
             << ", stored " << to_string(c.stored) << "\n";
      }
      emit(json ? report.dump(2) + "\n" : text.str(), out_path);
      return status;
    }

    if (*cat_cmd) {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& g : catalogue_all()) out.push_back(to_json(*g));
      emit(json ? out.dump(2) + "\n" : out.dump(2) + "\n", out_path);
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pairblow::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
