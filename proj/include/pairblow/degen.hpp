#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pairblow/dimsolve.hpp"
#include "pairblow/geomcat.hpp"
#include "pairblow/qlaurent.hpp"

namespace pairblow {

/// Z(geometry/divisor; insertions | boundary)_class, or the absolute
/// Z(geometry; insertions)_class when `divisor` is empty.
struct RelPFSymbol {
  std::string geometry;
  std::string divisor;
  std::vector<Insertion> insertions;
  std::optional<WeightedPartition> boundary;
  CurveClass cls;

  bool is_absolute() const { return divisor.empty(); }
  /// No insertions, empty boundary and zero class: the factor is 1.
  bool is_trivial() const;
  /// "Z(P3/H;tau0(pt)|(1,pt))_{L}"; insertions sorted, support flags dropped.
  std::string canonical() const;
};

struct IdentityTerm {
  QLaurent coefficient;
  WeightedPartition eta;
  std::optional<int> d;
  bool d_unbounded = false;
  std::optional<int> c;
  RelPFSymbol small;
  RelPFSymbol large;  // carries the dual boundary
};

/// A gate together with its certificate and audit result.
struct SolvedGate {
  GateProblem problem;
  GateCertificate certificate;
  std::vector<std::string> audit_failures;
};

/// lhs = sum over terms of coefficient * small * large.
struct SymbolicIdentity {
  std::string name;
  RelPFSymbol lhs;
  std::vector<IdentityTerm> terms;
  std::vector<SolvedGate> gates;
};

/// (-1)^(|eta| - l(eta)) * z(eta) * q^(-|eta|).
QLaurent degeneration_coefficient(const WeightedPartition& eta);

/// An absolute invariant to be degenerated.
struct Setup {
  std::string id;
  GeometryPtr geometry;
  CenterKind center;
  CurveClass total;
  std::vector<Insertion> insertions;
};

/// Ids: lemma3.1 .. lemma3.6, lemma4.1 .. lemma4.4, pt0, curve0 (class
/// Bt + k*e with k symbolic), and the concrete specializations
/// lemma3.3@P3, lemma3.4@P3_blown, lemma3.5@P3, lemma3.6@P3_blown.
Setup make_setup(const std::string& id);
std::vector<std::string> setup_ids();

enum class Side { Small, Large };

/// Side forced by the support flags: a flag matching the center puts the
/// insertion on the large side; an unflagged insertion goes to the small
/// side. Throws UnsupportedInsertionSide otherwise or when the label is
/// missing from that side's model.
Side resolve_side(const Degeneration& deg, const Insertion& ins);

struct AssembleOptions {
  std::optional<std::pair<int, std::optional<int>>> k_range;
  std::optional<int> c_lower_bound;
  int enum_bound = 6;
};

SymbolicIdentity assemble(const Setup& setup, const AssembleOptions& opts);

/// Sums over every marking partition allowed by `sides` (one list of
/// admissible sides per insertion).
SymbolicIdentity assemble_markings(const Setup& setup, const std::vector<std::vector<Side>>& sides,
                                   const AssembleOptions& opts);

/// factor * num / den, with trivial symbols standing for 1.
struct Fraction {
  QLaurent factor = QLaurent::constant(1);
  RelPFSymbol num;
  RelPFSymbol den;
};

struct RatioResult {
  Fraction relative;
  std::optional<Fraction> absolute;
};

/// Both identities must be single-term with the same large factor; the
/// ratio of their left sides is then the ratio of the small factors.
/// Throws NoCommonFactor otherwise.
RatioResult cancel_pair(const SymbolicIdentity& x, const SymbolicIdentity& xt);

/// Adds the absolute form taken from a specialized pair whose relative
/// fraction coincides symbol for symbol. Throws NoCommonFactor if it does not.
RatioResult with_specialization(RatioResult generic, const SymbolicIdentity& x_spec,
                                const SymbolicIdentity& xt_spec);

class OracleTable;

/// Evaluates the first form whose symbols are all in the table. Throws
/// MissingOracle when no form is fully known, NonExactDivision or
/// DivisionByZero from the final division.
QLaurent substitute_oracle(const RatioResult& ratio, const OracleTable& table, std::string* form_used = nullptr);

nlohmann::json to_json(const IdentityTerm& t);
nlohmann::json to_json(const SymbolicIdentity& id);
nlohmann::json to_json(const Fraction& f);
nlohmann::json to_json(const RatioResult& r);
std::string render_text(const SymbolicIdentity& id);

}  // namespace pairblow
