#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace pairblow {

struct CohClass {
  std::string label;
  int codim = 0;  // complex codimension; real degree is 2*codim
};

/// Graded cohomology basis of a surface (dim 2) or 3-fold (dim 3) with its
/// Poincare-duality pairing on labels.
///
/// Invariants checked on construction: labels unique, codims in [0, dim],
/// the pairing is an involution matching complementary codimensions, and
/// there is exactly one codim-0 label whose dual has codim dim.
class CohModel {
 public:
  CohModel(std::string name, int dim, std::vector<CohClass> elements,
           std::vector<std::pair<std::string, std::string>> pairing);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const std::vector<CohClass>& elements() const { return elements_; }
  const std::vector<std::pair<std::string, std::string>>& pairing() const { return pairing_; }

  bool has(std::string_view label) const;
  /// Position in elements(); throws InvalidModel for unknown labels.
  std::size_t index_of(std::string_view label) const;
  int codim(std::string_view label) const;
  const std::string& dual(std::string_view label) const;
  const std::string& identity_label() const { return elements_[identity_].label; }
  const std::string& point_label() const { return dual(identity_label()); }

 private:
  std::string name_;
  int dim_;
  std::vector<CohClass> elements_;
  std::vector<std::pair<std::string, std::string>> pairing_;
  std::vector<std::size_t> dual_index_;
  std::size_t identity_ = 0;
};

using CohModelPtr = std::shared_ptr<const CohModel>;

/// Built-in models: surfaces "P2" and "ruled" (even cohomology of P_C(N_C));
/// 3-folds "abstract_X", "X_blown_point", "X_blown_curve", "P3", "P3_blown",
/// "bundle_over_C", "bundle_over_E". Throws InvalidModel for other names.
CohModelPtr builtin_model(std::string_view name);

enum class Support { AwayFromC, AwayFromE, AwayFromP };

std::string to_string(Support s);

/// A cohomology class on a model, with optional support markers.
struct CohElement {
  CohModelPtr model;
  std::string label;
  std::set<Support> support;

  int codim() const { return model->codim(label); }
};

/// Throws InvalidModel if `label` is not in `model`.
CohElement make_element(CohModelPtr model, std::string label, std::set<Support> support = {});

/// Descendent insertion tau_level(class).
struct Insertion {
  int level = 0;
  CohElement cls;
};

/// "tau1(pt)"
std::string to_string(const Insertion& ins);

struct Part {
  int size = 1;
  std::string label;

  friend bool operator==(const Part&, const Part&) = default;
};

/// Cohomology-weighted partition over a surface model. Parts are kept in a
/// canonical order (size descending, then model label order) so equality is
/// multiset equality.
class WeightedPartition {
 public:
  explicit WeightedPartition(CohModelPtr model, std::vector<Part> parts = {});

  const CohModelPtr& model() const { return model_; }
  const std::vector<Part>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int size() const;                 // |eta|
  int length() const { return static_cast<int>(parts_.size()); }  // l(eta)

  friend bool operator==(const WeightedPartition& a, const WeightedPartition& b);
  friend std::strong_ordering operator<=>(const WeightedPartition& a,
                                          const WeightedPartition& b);

 private:
  CohModelPtr model_;
  std::vector<Part> parts_;
};

/// "(1,pt)(2,L)"; the empty partition renders as "".
std::string to_string(const WeightedPartition& eta);

/// |Aut(eta)|: product over groups of identical (size, weight) of group size!.
std::uint64_t aut_order(const WeightedPartition& eta);
/// z(eta) = |Aut(eta)| * prod eta_i; z(empty) = 1.
std::uint64_t zeta(const WeightedPartition& eta);
/// Same sizes, weights replaced by their Poincare duals.
WeightedPartition dual_partition(const WeightedPartition& eta);
/// |eta| - l(eta) + sum of codim(dual weight), in complex units.
int nakajima_codim(const WeightedPartition& eta);
/// Sum over parts of codim of the dual weight.
int dual_codim_sum(const WeightedPartition& eta);

/// Every weighted partition with |eta| <= max_size, ordered by |eta| and
/// then by parts.
std::vector<WeightedPartition> enumerate_partitions(const CohModelPtr& model, int max_size);

// JSON: models as {dim, elements:[{label,codim}], pairing:[[a,b],...]} (plus
// an optional "name"); partitions as [[size,label],...].
nlohmann::json to_json(const CohModel& model);
CohModelPtr model_from_json(const nlohmann::json& j);
nlohmann::json to_json(const WeightedPartition& eta);
WeightedPartition partition_from_json(const nlohmann::json& j, const CohModelPtr& model);

}  // namespace pairblow
