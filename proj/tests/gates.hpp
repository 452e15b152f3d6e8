#pragma once

#include <string>
#include <vector>

#include "pairblow/degen.hpp"

// Every gate the setups generate, across the hypothesis variants the CLI
// exposes: fixed k in 1..5 and k >= 1 for the vanishing setups, c0 in 0..3
// for the curve setups.
inline std::vector<pairblow::GateProblem> all_setup_gates() {
  using namespace pairblow;
  std::vector<GateProblem> out;
  auto add = [&](const std::string& id, AssembleOptions opts) {
    for (auto& g : assemble(make_setup(id), opts).gates) out.push_back(g.problem);
  };
  for (const auto& id : setup_ids()) {
    const bool vanishing = id == "pt0" || id == "curve0";
    const bool curve = id.starts_with("lemma4") || id == "curve0";
    std::vector<std::optional<int>> c0s{std::nullopt};
    if (curve) c0s = {0, 1, 2, 3};
    for (const auto& c0 : c0s) {
      if (vanishing) {
        for (int k = 1; k <= 5; ++k) add(id, {std::make_pair(k, std::optional<int>(k)), c0, 6});
        add(id, {std::make_pair(1, std::optional<int>()), c0, 6});
      } else {
        add(id, {std::nullopt, c0, 6});
      }
    }
  }
  return out;
}
