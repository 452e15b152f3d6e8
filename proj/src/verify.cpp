#include "pairblow/verify.hpp"

#include <algorithm>
#include <map>

#include "pairblow/degen.hpp"
#include "pairblow/errors.hpp"

namespace pairblow {

namespace {

// One admissible boundary datum: partition text and C-degree.
using Admissible = std::pair<std::string, std::optional<int>>;

struct Plan {
  std::string id;
  std::string statement;
  std::vector<std::string> setups;         // one setup for lemmas and vanishing ids, two for ratios
  std::vector<std::string> specialization;  // empty or a pair
  std::vector<Admissible> admissible;
  std::optional<QLaurent> expected;  // ratio pipelines
  std::optional<int> default_c0;
  bool vanishing = false;
};

QLaurent one() { return QLaurent::constant(1); }

std::vector<Plan> plans() {
  const QLaurent q = QLaurent::q();
  const std::vector<Admissible> none{}, empty{{"", std::nullopt}}, pt{{"(1,pt)", std::nullopt}},
      line{{"(1,L)", std::nullopt}}, empty_d0{{"", 0}}, pt_d0{{"(1,pt)", 0}};
  std::vector<Plan> out{
      {"pt0", "Z(Xt; prod tau(p*gamma))_{p^!beta + k e} = 0 for k >= 1", {"pt0"}, {}, none, std::nullopt,
       std::nullopt, true},
      {"pt1", "Z(X; prod tau(gamma))_beta = Z(Xt; prod tau(p*gamma))_{p^!beta}", {"lemma3.1", "lemma3.2"}, {},
       empty, one(), std::nullopt},
      {"pt2", "Z(X; prod tau(gamma) tau0(pt))_beta = (1+q)^2 Z(Xt; prod tau(p*gamma))_{p^!beta - e}",
       {"lemma3.3", "lemma3.4"}, {"lemma3.3@P3", "lemma3.4@P3_blown"}, pt, one() + QLaurent::constant(2) * q + q.pow(2),
       std::nullopt},
      {"pt3",
       "Z(X; prod tau(gamma) tau1(pt))_beta = 1/2 (1-q^2) Z(Xt; prod tau(p*gamma) tau0(E^2))_{p^!beta - e}",
       {"lemma3.5", "lemma3.6"}, {"lemma3.5@P3", "lemma3.6@P3_blown"}, line,
       QLaurent::constant(Rational(1, 2)) * (one() - q.pow(2)), std::nullopt},
      {"curve0", "Z(Xt; prod tau(p*gamma))_{p^!beta + k e} = 0 for k >= 1, c >= 0", {"curve0"}, {}, none,
       std::nullopt, 0, true},
      {"curve1", "Z(X; prod tau(gamma))_beta = Z(Xt; prod tau(p*gamma))_{p^!beta}, c > 0",
       {"lemma4.1", "lemma4.2"}, {}, empty_d0, one(), 1},
      {"curve2", "Z(X; prod tau(gamma) tau0(C))_beta = (1+q) Z(Xt; prod tau(p*gamma) tau0(E))_{p^!beta - e}, c > 1",
       {"lemma4.3", "lemma4.4"}, {}, pt_d0, one() + q, 2},
  };
  const std::map<std::string, std::pair<std::vector<Admissible>, std::optional<int>>> lemmas{
      {"lemma3.1", {empty, std::nullopt}}, {"lemma3.2", {empty, std::nullopt}},
      {"lemma3.3", {pt, std::nullopt}},    {"lemma3.4", {pt, std::nullopt}},
      {"lemma3.5", {line, std::nullopt}},  {"lemma3.6", {line, std::nullopt}},
      {"lemma4.1", {empty_d0, 1}},         {"lemma4.2", {empty_d0, 1}},
      {"lemma4.3", {pt_d0, 2}},            {"lemma4.4", {pt_d0, 2}},
  };
  for (const auto& [id, data] : lemmas) {
    out.push_back({id, "admissible boundary data of the " + id + " degeneration", {id}, {}, data.first,
                   std::nullopt, data.second});
  }
  return out;
}

std::string render(const std::vector<Admissible>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    out += (i ? ", " : "") + (set[i].first.empty() ? std::string("empty") : set[i].first);
    if (set[i].second) out += " d=" + std::to_string(*set[i].second);
  }
  return out + "}";
}

std::vector<Admissible> admissible_of(const SymbolicIdentity& id, std::vector<std::string>& messages) {
  std::vector<Admissible> out;
  for (const auto& t : id.terms) {
    out.emplace_back(to_string(t.eta), t.d);
    if (t.d_unbounded) messages.push_back(id.name + ": solution family with d >= " + std::to_string(*t.d) + ", c = 0");
  }
  return out;
}

class Runner {
 public:
  explicit Runner(DerivationTrace& trace) : trace_(trace) {}

  SymbolicIdentity run(const std::string& setup_id, AssembleOptions opts, const std::string& label,
                       const std::vector<Admissible>& expected) {
    SymbolicIdentity id = assemble(make_setup(setup_id), opts);
    id.name = label;
    for (const auto& g : id.gates) {
      trace_.gates.push_back({{"identity", label},
                              {"problem", to_json(g.problem)},
                              {"certificate", to_json(g.certificate)},
                              {"audit", g.audit_failures}});
      for (const auto& f : g.audit_failures) fail(g.problem.name + ": certificate audit: " + f);
    }
    trace_.identities.push_back(to_json(id));
    auto got = admissible_of(id, trace_.messages);
    if (got != expected) {
      for (const auto& a : got) {
        if (std::find(expected.begin(), expected.end(), a) == expected.end()) {
          fail(label + ": extra admissible solution " + render({a}) + certificate_note(id, a));
        }
      }
      for (const auto& a : expected) {
        if (std::find(got.begin(), got.end(), a) == got.end()) fail(label + ": missing expected solution " + render({a}));
      }
    }
    return id;
  }

  void fail(const std::string& msg) {
    trace_.messages.push_back(msg);
    trace_.status = 1;
  }

 private:
  static std::string certificate_note(const SymbolicIdentity& id, const Admissible& a) {
    for (const auto& t : id.terms) {
      if (to_string(t.eta) == a.first && t.d == a.second && t.c) return " (requires c = " + std::to_string(*t.c) + ")";
    }
    return "";
  }

  DerivationTrace& trace_;
};

}  // namespace

std::vector<std::string> theorem_ids() {
  std::vector<std::string> out;
  for (const auto& p : plans()) out.push_back(p.id);
  return out;
}

DerivationTrace verify(const RunConfig& cfg, const OracleTable& table) {
  const auto all = plans();
  const auto it = std::find_if(all.begin(), all.end(), [&](const Plan& p) { return p.id == cfg.theorem; });
  if (it == all.end()) throw InvalidConfig("unknown theorem id '" + cfg.theorem + "'");
  const Plan& plan = *it;
  if (cfg.enum_bound < 1) throw InvalidConfig("--enum-bound must be >= 1");
  if (plan.vanishing && (cfg.k_range.first < 1 || cfg.k_range.second < cfg.k_range.first)) {
    throw InvalidConfig("k range must be a nonempty range of integers >= 1");
  }

  DerivationTrace trace;
  trace.theorem = plan.id;
  trace.stated_formula = plan.statement;
  const std::optional<int> c0 = cfg.c_bound ? cfg.c_bound : plan.default_c0;
  trace.params = {{"c_bound", c0 ? nlohmann::json(*c0) : nlohmann::json(nullptr)}, {"enum_bound", cfg.enum_bound}};
  Runner runner(trace);
  AssembleOptions opts{.k_range = std::nullopt, .c_lower_bound = c0, .enum_bound = cfg.enum_bound};

  try {
    if (plan.vanishing) {
      trace.params["k_range"] = {cfg.k_range.first, cfg.k_range.second};
      bool all_zero = true;
      for (int k = cfg.k_range.first; k <= cfg.k_range.second; ++k) {
        opts.k_range = std::make_pair(k, std::optional<int>(k));
        auto id = runner.run(plan.setups[0], opts, plan.id + " k=" + std::to_string(k), plan.admissible);
        all_zero = all_zero && id.terms.empty();
      }
      opts.k_range = std::make_pair(1, std::optional<int>());
      auto sym = runner.run(plan.setups[0], opts, plan.id + " k>=1", plan.admissible);
      all_zero = all_zero && sym.terms.empty();
      trace.expected = "0";
      if (all_zero) {
        trace.result = "0";
      } else {
        runner.fail("degeneration identity has surviving terms");
      }
      return trace;
    }

    if (plan.setups.size() == 1) {
      auto id = runner.run(plan.setups[0], opts, plan.id, plan.admissible);
      std::vector<std::string> ignore;
      trace.result = render(admissible_of(id, ignore));
      trace.expected = render(plan.admissible);
      return trace;
    }

    trace.expected = to_string(*plan.expected);
    auto x = runner.run(plan.setups[0], opts, plan.setups[0], plan.admissible);
    auto xt = runner.run(plan.setups[1], opts, plan.setups[1], plan.admissible);
    RatioResult ratio = cancel_pair(x, xt);
    if (!plan.specialization.empty()) {
      auto xs = runner.run(plan.specialization[0], opts, plan.specialization[0], plan.admissible);
      auto xts = runner.run(plan.specialization[1], opts, plan.specialization[1], plan.admissible);
      ratio = with_specialization(std::move(ratio), xs, xts);
    }
    std::string form;
    const QLaurent value = substitute_oracle(ratio, table, &form);
    trace.ratio = to_json(ratio);
    trace.ratio["form_used"] = form;
    trace.result = to_string(value);
    trace.messages.push_back("ratio evaluated through its " + form + " form");
    if (!(value == *plan.expected)) runner.fail("derived factor " + to_string(value) + " differs from stated factor");
  } catch (const NoCommonFactor& e) {
    runner.fail(std::string("cancellation failed: ") + e.what());
  } catch (const MissingOracle& e) {
    runner.fail(e.what());
  } catch (const NonExactDivision& e) {
    runner.fail(e.what());
  } catch (const DivisionByZero& e) {
    runner.fail(e.what());
  }
  return trace;
}

}  // namespace pairblow
