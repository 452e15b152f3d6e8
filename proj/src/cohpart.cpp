#include "pairblow/cohpart.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "pairblow/errors.hpp"

namespace pairblow {

CohModel::CohModel(std::string name, int dim, std::vector<CohClass> elements,
                   std::vector<std::pair<std::string, std::string>> pairing)
    : name_(std::move(name)), dim_(dim), elements_(std::move(elements)), pairing_(std::move(pairing)) {
  if (dim_ < 1) throw InvalidModel(name_ + ": dimension must be positive");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& e = elements_[i];
    if (e.label.empty()) throw InvalidModel(name_ + ": empty label");
    if (e.codim < 0 || e.codim > dim_) {
      throw InvalidModel(name_ + ": codim of '" + e.label + "' outside [0, dim]");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (elements_[j].label == e.label) throw InvalidModel(name_ + ": duplicate label " + e.label);
    }
  }
  constexpr auto unset = static_cast<std::size_t>(-1);
  dual_index_.assign(elements_.size(), unset);
  for (const auto& [a, b] : pairing_) {
    const std::size_t ia = index_of(a);
    const std::size_t ib = index_of(b);
    if (dual_index_[ia] != unset || dual_index_[ib] != unset) {
      throw InvalidModel(name_ + ": label paired twice in (" + a + ", " + b + ")");
    }
    dual_index_[ia] = ib;
    dual_index_[ib] = ia;
    if (elements_[ia].codim + elements_[ib].codim != dim_) {
      throw InvalidModel(name_ + ": pairing (" + a + ", " + b + ") is not complementary");
    }
  }
  int identities = 0;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (dual_index_[i] == unset) throw InvalidModel(name_ + ": '" + elements_[i].label + "' has no dual");
    if (elements_[i].codim == 0) {
      ++identities;
      identity_ = i;
    }
  }
  if (identities != 1) throw InvalidModel(name_ + ": need exactly one codim-0 class");
}

bool CohModel::has(std::string_view label) const {
  return std::any_of(elements_.begin(), elements_.end(),
                     [&](const CohClass& e) { return e.label == label; });
}

std::size_t CohModel::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].label == label) return i;
  }
  throw InvalidModel(name_ + ": unknown label '" + std::string(label) + "'");
}

int CohModel::codim(std::string_view label) const { return elements_[index_of(label)].codim; }

const std::string& CohModel::dual(std::string_view label) const {
  return elements_[dual_index_[index_of(label)]].label;
}

namespace {

CohModel make_builtin(std::string_view name) {
  using P = std::pair<std::string, std::string>;
  if (name == "P2") {
    return CohModel("P2", 2, {{"1", 0}, {"L", 1}, {"pt", 2}}, {P{"1", "pt"}, P{"L", "L"}});
  }
  if (name == "ruled") {
    // f: fiber of P_C(N_C) -> C, s: a section class.
    return CohModel("ruled", 2, {{"1", 0}, {"f", 1}, {"s", 1}, {"pt", 2}},
                    {P{"1", "pt"}, P{"f", "s"}});
  }
  // Abstract 3-fold: D and Dc are divisor placeholders dual to the generic
  // insertion class gamma and to the curve class C.
  std::vector<CohClass> abstract{{"1", 0}, {"D", 1}, {"Dc", 1}, {"gamma", 2}, {"C", 2}, {"pt", 3}};
  std::vector<P> abstract_pairs{{"1", "pt"}, {"D", "gamma"}, {"Dc", "C"}};
  if (name == "abstract_X") return CohModel("abstract_X", 3, abstract, abstract_pairs);
  if (name == "X_blown_point" || name == "X_blown_curve") {
    abstract.push_back({"E", 1});
    abstract.push_back({"E2neg", 2});  // -E^2
    abstract_pairs.emplace_back("E", "E2neg");
    return CohModel(std::string(name), 3, abstract, abstract_pairs);
  }
  if (name == "P3") {
    return CohModel("P3", 3, {{"1", 0}, {"H", 1}, {"L", 2}, {"pt", 3}}, {P{"1", "pt"}, P{"H", "L"}});
  }
  if (name == "P3_blown") {
    return CohModel("P3_blown", 3,
                    {{"1", 0}, {"H", 1}, {"E", 1}, {"L", 2}, {"E2neg", 2}, {"pt", 3}},
                    {P{"1", "pt"}, P{"H", "L"}, P{"E", "E2neg"}});
  }
  if (name == "bundle_over_C") {
    // G: pullback of a point of C; C: the zero section; F: a fiber line.
    return CohModel("bundle_over_C", 3,
                    {{"1", 0}, {"Dinf", 1}, {"G", 1}, {"F", 2}, {"C", 2}, {"pt", 3}},
                    {P{"1", "pt"}, P{"Dinf", "F"}, P{"G", "C"}});
  }
  if (name == "bundle_over_E") {
    // E: the zero section; Ef, Es: fiber and section curves inside it.
    return CohModel("bundle_over_E", 3,
                    {{"1", 0}, {"Dinf", 1}, {"E", 1}, {"G", 1}, {"F", 2}, {"Es", 2}, {"Ef", 2},
                     {"pt", 3}},
                    {P{"1", "pt"}, P{"Dinf", "F"}, P{"E", "Es"}, P{"G", "Ef"}});
  }
  throw InvalidModel("unknown cohomology model '" + std::string(name) + "'");
}

}  // namespace

CohModelPtr builtin_model(std::string_view name) {
  static std::mutex mutex;
  static std::map<std::string, CohModelPtr, std::less<>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  auto model = std::make_shared<const CohModel>(make_builtin(name));
  cache.emplace(std::string(name), model);
  return model;
}

std::string to_string(Support s) {
  switch (s) {
    case Support::AwayFromC: return "away_from_C";
    case Support::AwayFromE: return "away_from_E";
    case Support::AwayFromP: return "away_from_P";
  }
  return "?";
}

CohElement make_element(CohModelPtr model, std::string label, std::set<Support> support) {
  if (!model->has(label)) {
    throw InvalidModel(model->name() + ": unknown label '" + label + "'");
  }
  return CohElement{std::move(model), std::move(label), std::move(support)};
}

std::string to_string(const Insertion& ins) {
  return "tau" + std::to_string(ins.level) + "(" + ins.cls.label + ")";
}

WeightedPartition::WeightedPartition(CohModelPtr model, std::vector<Part> parts)
    : model_(std::move(model)), parts_(std::move(parts)) {
  for (const auto& p : parts_) {
    if (p.size < 1) throw InvalidModel("partition part sizes must be positive");
    (void)model_->index_of(p.label);
  }
  std::sort(parts_.begin(), parts_.end(), [this](const Part& a, const Part& b) {
    if (a.size != b.size) return a.size > b.size;
    return model_->index_of(a.label) < model_->index_of(b.label);
  });
}

int WeightedPartition::size() const {
  int total = 0;
  for (const auto& p : parts_) total += p.size;
  return total;
}

bool operator==(const WeightedPartition& a, const WeightedPartition& b) {
  return a.model_->name() == b.model_->name() && a.parts_ == b.parts_;
}

std::strong_ordering operator<=>(const WeightedPartition& a, const WeightedPartition& b) {
  if (auto c = a.model_->name() <=> b.model_->name(); c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  for (std::size_t i = 0; i < a.parts_.size(); ++i) {
    const auto& pa = a.parts_[i];
    const auto& pb = b.parts_[i];
    if (auto c = pb.size <=> pa.size; c != 0) return c;
    if (auto c = a.model_->index_of(pa.label) <=> a.model_->index_of(pb.label); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const WeightedPartition& eta) {
  std::string out;
  for (const auto& p : eta.parts()) out += "(" + std::to_string(p.size) + "," + p.label + ")";
  return out;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("zeta overflows 64 bits");
  return out;
}

}  // namespace

std::uint64_t aut_order(const WeightedPartition& eta) {
  std::uint64_t order = 1;
  const auto& parts = eta.parts();
  // Canonical order groups identical parts contiguously.
  std::uint64_t run = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    run = (i > 0 && parts[i] == parts[i - 1]) ? run + 1 : 1;
    order = checked_mul(order, run);
  }
  return order;
}

std::uint64_t zeta(const WeightedPartition& eta) {
  std::uint64_t z = aut_order(eta);
  for (const auto& p : eta.parts()) z = checked_mul(z, static_cast<std::uint64_t>(p.size));
  return z;
}

WeightedPartition dual_partition(const WeightedPartition& eta) {
  std::vector<Part> parts;
  parts.reserve(eta.parts().size());
  for (const auto& p : eta.parts()) parts.push_back({p.size, eta.model()->dual(p.label)});
  return WeightedPartition(eta.model(), std::move(parts));
}

int dual_codim_sum(const WeightedPartition& eta) {
  int total = 0;
  for (const auto& p : eta.parts()) total += eta.model()->codim(eta.model()->dual(p.label));
  return total;
}

int nakajima_codim(const WeightedPartition& eta) {
  return eta.size() - eta.length() + dual_codim_sum(eta);
}

namespace {

struct ColoredPart {
  int size;
  std::size_t label;
};

void extend(const CohModelPtr& model, const std::vector<ColoredPart>& kinds, std::size_t first,
            int remaining, std::vector<Part>& current, std::vector<WeightedPartition>& out) {
  out.emplace_back(model, current);
  for (std::size_t i = first; i < kinds.size(); ++i) {
    if (kinds[i].size > remaining) continue;
    current.push_back({kinds[i].size, model->elements()[kinds[i].label].label});
    extend(model, kinds, i, remaining - kinds[i].size, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<WeightedPartition> enumerate_partitions(const CohModelPtr& model, int max_size) {
  std::vector<ColoredPart> kinds;
  for (int s = max_size; s >= 1; --s) {
    for (std::size_t l = 0; l < model->elements().size(); ++l) kinds.push_back({s, l});
  }
  std::vector<WeightedPartition> out;
  std::vector<Part> current;
  extend(model, kinds, 0, std::max(max_size, 0), current, out);
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json to_json(const CohModel& model) {
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& e : model.elements()) elements.push_back({{"label", e.label}, {"codim", e.codim}});
  nlohmann::json pairing = nlohmann::json::array();
  for (const auto& [a, b] : model.pairing()) pairing.push_back({a, b});
  return {{"name", model.name()}, {"dim", model.dim()}, {"elements", elements}, {"pairing", pairing}};
}

CohModelPtr model_from_json(const nlohmann::json& j) {
  try {
    std::vector<CohClass> elements;
    for (const auto& e : j.at("elements")) {
      elements.push_back({e.at("label").get<std::string>(), e.at("codim").get<int>()});
    }
    std::vector<std::pair<std::string, std::string>> pairing;
    for (const auto& p : j.at("pairing")) {
      if (!p.is_array() || p.size() != 2) throw ParseError("pairing entries must be [label, label]");
      pairing.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    return std::make_shared<const CohModel>(j.value("name", std::string("custom")),
                                            j.at("dim").get<int>(), std::move(elements),
                                            std::move(pairing));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cohomology model JSON: ") + e.what());
  }
}

nlohmann::json to_json(const WeightedPartition& eta) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : eta.parts()) out.push_back({p.size, p.label});
  return out;
}

WeightedPartition partition_from_json(const nlohmann::json& j, const CohModelPtr& model) {
  try {
    std::vector<Part> parts;
    for (const auto& p : j) {
      if (!p.is_array() || p.size() != 2) throw ParseError("partition parts must be [size, label]");
      parts.push_back({p[0].get<int>(), p[1].get<std::string>()});
    }
    return WeightedPartition(model, std::move(parts));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("partition JSON: ") + e.what());
  }
}

}  // namespace pairblow
