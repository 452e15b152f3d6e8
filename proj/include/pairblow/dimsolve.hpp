#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pairblow/cohpart.hpp"
#include "pairblow/geomcat.hpp"

namespace pairblow {

/// Sum over insertions of codim(gamma) + level - 1.
int insertion_codim_sum(const std::vector<Insertion>& insertions);

/// Sum of dual-weight codims - l(eta) + |eta|.
int vdim_relative_gap(const WeightedPartition& eta);

/// Reduced dimension constraint
///   coef_S*S + coef_n*|eta| + coef_dc*d*c + coef_k*k = l(eta) + rhs_const
/// where S is the sum of the codims of the dual weights of eta.
struct GateProblem {
  std::string name;
  int coef_S = 1;
  int coef_n = 0;
  int coef_dc = 0;
  int coef_k = 0;
  int rhs_const = 0;
  /// Required when coef_k != 0. Second entry empty = unbounded above.
  std::optional<std::pair<int, std::optional<int>>> k_range;
  /// Lower bound c0 on c; used only when coef_dc != 0 (default 0).
  std::optional<int> c_lower_bound;
  CohModelPtr surface;

  int c0() const { return c_lower_bound.value_or(0); }
  friend bool operator==(const GateProblem&, const GateProblem&);
};

/// "1*S + 3*n + 2*k = ell + 0", with the d*c term when present.
std::string equation_string(const GateProblem& p);

/// Gate for one side assignment of a degeneration: the small-side class
/// family is solved from the catalogue constraints and the small-side
/// vdim c1(beta1) - |eta| is matched against l(eta) + small insertion codims.
GateProblem build_gate(std::string name, const Degeneration& deg, const CurveClass& total,
                       const std::vector<Insertion>& small_insertions,
                       std::optional<std::pair<int, std::optional<int>>> k_range,
                       std::optional<int> c_lower_bound);

/// Multiset of (part size, codim of the dual weight), sorted descending.
using PartShape = std::vector<std::pair<int, int>>;

struct GateSolution {
  int ell = 0;
  int size = 0;
  int S = 0;
  std::optional<int> k;  // empty when the gate has no k term
  /// C-degree; empty when the gate has no d*c term. With d_unbounded the
  /// solution holds for every d >= *d.
  std::optional<int> d;
  bool d_unbounded = false;
  /// Value of c forced by the solution; empty = any c >= c0.
  std::optional<int> c;
  std::vector<PartShape> shapes;
  std::vector<WeightedPartition> partitions;

  friend bool operator==(const GateSolution&, const GateSolution&) = default;
};

/// One step of the tail argument: after `justification`, lhs - rhs is
/// bounded below by `bound` (a form in S, n, k, ell, dc).
struct ChainStep {
  std::string justification;
  std::string bound;

  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

struct GateCertificate {
  std::vector<GateSolution> solutions;  // ordered by (ell, |eta|, S, d, k)
  /// Every |eta| <= enumerated_up_to was checked exhaustively.
  int enumerated_up_to = 0;
  /// The tail covers |eta| >= tail_n_from for every k in range, and
  /// additionally every k >= tail_k_from when present.
  int tail_n_from = 0;
  std::optional<int> tail_k_from;
  std::vector<ChainStep> chain;

  bool empty() const { return solutions.empty(); }
  friend bool operator==(const GateCertificate&, const GateCertificate&) = default;
};

/// Throws InvalidGate for malformed problems (negative S, k or d*c
/// coefficients, missing k range, c0 < 0, enum_bound < 1) and DominanceFails
/// when coef_n <= 1.
GateCertificate solve_gate(const GateProblem& p, int enum_bound);

/// Independent audit: re-substitutes every solution, checks every concrete
/// partition against its aggregate data, and validates the tail bounds by
/// interval evaluation. Returns the list of failures (empty = valid).
std::vector<std::string> check_certificate(const GateProblem& p, const GateCertificate& cert);

bool satisfies(const GateProblem& p, int ell, int size, int S, int k, int d, int c);

nlohmann::json to_json(const GateProblem& p);
GateProblem gate_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GateCertificate& c);
GateCertificate certificate_from_json(const nlohmann::json& j, const CohModelPtr& surface);
std::string render_text(const GateProblem& p, const GateCertificate& c);

}  // namespace pairblow
