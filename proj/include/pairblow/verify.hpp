#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pairblow/oracle.hpp"
#include "pairblow/trace.hpp"

namespace pairblow {

struct RunConfig {
  std::string theorem;
  std::pair<int, int> k_range{1, 5};
  std::optional<int> c_bound;
  int enum_bound = 6;
};

/// pt0 pt1 pt2 pt3 curve0 curve1 curve2 lemma3.1 .. lemma3.6 lemma4.1 .. lemma4.4
std::vector<std::string> theorem_ids();

/// Runs one pipeline. Throws InvalidConfig for unknown ids or bad ranges;
/// derivation failures are reported in the trace with status 1.
DerivationTrace verify(const RunConfig& cfg, const OracleTable& table);

}  // namespace pairblow
