#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "pairblow/cohpart.hpp"
#include "pairblow/errors.hpp"

using namespace pairblow;

namespace {

CohModelPtr p2() { return builtin_model("P2"); }
CohModelPtr ruled() { return builtin_model("ruled"); }

WeightedPartition wp(const CohModelPtr& m, std::vector<Part> parts) { return WeightedPartition(m, std::move(parts)); }

WeightedPartition random_partition(std::mt19937& rng, const CohModelPtr& m) {
  std::uniform_int_distribution<int> len(0, 6), size(1, 3);
  std::uniform_int_distribution<std::size_t> label(0, m->elements().size() - 1);
  std::vector<Part> parts;
  for (int i = len(rng); i > 0; --i) parts.push_back({size(rng), m->elements()[label(rng)].label});
  return wp(m, parts);
}

}  // namespace

TEST(CohModel, BuiltinsSatisfyInvariants) {
  for (const char* name : {"P2", "ruled", "abstract_X", "X_blown_point", "X_blown_curve", "P3", "P3_blown",
                           "bundle_over_C", "bundle_over_E"}) {
    const auto m = builtin_model(name);
    for (const auto& e : m->elements()) {
      EXPECT_EQ(m->codim(e.label) + m->codim(m->dual(e.label)), m->dim()) << name << " " << e.label;
      EXPECT_EQ(m->dual(m->dual(e.label)), e.label);
    }
    EXPECT_EQ(m->codim(m->identity_label()), 0);
    EXPECT_EQ(m->codim(m->point_label()), m->dim());
  }
  EXPECT_THROW(builtin_model("K3"), InvalidModel);
}

TEST(CohModel, RejectsBrokenModels) {
  EXPECT_THROW(CohModel("bad", 2, {{"1", 0}, {"pt", 1}}, {{"1", "pt"}}), InvalidModel);
  EXPECT_THROW(CohModel("bad", 2, {{"1", 0}, {"pt", 2}, {"L", 1}}, {{"1", "pt"}}), InvalidModel);
  EXPECT_THROW(CohModel("bad", 2, {{"1", 0}, {"a", 0}, {"pt", 2}, {"b", 2}}, {{"1", "pt"}, {"a", "b"}}),
               InvalidModel);
  EXPECT_THROW(CohModel("bad", 2, {{"1", 0}, {"pt", 2}}, {{"1", "pt"}, {"pt", "1"}}), InvalidModel);
  EXPECT_THROW(make_element(p2(), "E"), InvalidModel);
}

TEST(Partition, AutExamples) {
  EXPECT_EQ(aut_order(wp(p2(), {{1, "pt"}})), 1u);
  EXPECT_EQ(aut_order(wp(p2(), {{2, "L"}, {2, "L"}})), 2u);
  EXPECT_EQ(aut_order(wp(p2(), {{1, "L"}, {2, "L"}})), 1u);
}

TEST(Partition, ZetaExamples) {
  EXPECT_EQ(zeta(wp(p2(), {{1, "pt"}})), 1u);
  EXPECT_EQ(zeta(wp(p2(), {{2, "L"}, {2, "L"}})), 8u);
  EXPECT_EQ(zeta(wp(p2(), {})), 1u);
}

TEST(Partition, DualExamples) {
  EXPECT_EQ(dual_partition(wp(p2(), {{1, "pt"}})), wp(p2(), {{1, "1"}}));
  EXPECT_EQ(dual_partition(wp(p2(), {{1, "L"}})), wp(p2(), {{1, "L"}}));
  EXPECT_EQ(dual_partition(wp(ruled(), {{2, "f"}, {1, "1"}})), wp(ruled(), {{2, "s"}, {1, "pt"}}));
}

TEST(Partition, NakajimaCodimExamples) {
  EXPECT_EQ(nakajima_codim(wp(p2(), {{1, "pt"}})), 0);
  EXPECT_EQ(nakajima_codim(wp(p2(), {})), 0);
  EXPECT_EQ(nakajima_codim(wp(p2(), {{2, "1"}})), 3);
  // (1,pt) balances S + 3|eta| = 2 + l(eta).
  const auto eta = wp(p2(), {{1, "pt"}});
  EXPECT_EQ(dual_codim_sum(eta) + 3 * eta.size(), 2 + eta.length());
}

TEST(Partition, CanonicalOrderAndText) {
  const auto a = wp(p2(), {{1, "pt"}, {2, "L"}, {1, "1"}});
  const auto b = wp(p2(), {{1, "1"}, {1, "pt"}, {2, "L"}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(to_string(a), "(2,L)(1,1)(1,pt)");
  EXPECT_EQ(to_string(wp(p2(), {})), "");
  EXPECT_THROW(wp(p2(), {{0, "pt"}}), InvalidModel);
}

TEST(Partition, RandomizedIdentities) {
  std::mt19937 rng(12345);
  for (int i = 0; i < 500; ++i) {
    const auto m = i % 2 ? p2() : ruled();
    const auto eta = random_partition(rng, m);
    const auto lab = brute::labeled(eta);
    std::uint64_t prod = 1;
    for (const auto& p : lab) prod *= p.first;
    const std::uint64_t aut = brute::aut_by_permutations(lab);
    ASSERT_EQ(aut_order(eta), aut) << to_string(eta);
    ASSERT_EQ(zeta(eta), aut * prod) << to_string(eta);
    ASSERT_EQ(dual_partition(dual_partition(eta)), eta);
    ASSERT_EQ(zeta(dual_partition(eta)), zeta(eta));
    std::uint64_t fact = 1;
    for (int k = 2; k <= eta.length(); ++k) fact *= k;
    ASSERT_EQ(fact % aut_order(eta), 0u);
    int both = 0;
    for (const auto& p : eta.parts()) both += m->codim(p.label) + m->codim(m->dual(p.label));
    ASSERT_EQ(both, 2 * eta.length());
  }
}

TEST(Partition, EnumerationMatchesNaiveCounts) {
  for (const auto& m : {p2(), ruled()}) {
    const int r = static_cast<int>(m->elements().size());
    for (int bound = 0; bound <= 6; ++bound) {
      const auto all = enumerate_partitions(m, bound);
      std::uint64_t expected = 0;
      for (int n = 0; n <= bound; ++n) expected += brute::count_weighted(n, n, r, r - 1);
      ASSERT_EQ(all.size(), expected) << m->name() << " bound " << bound;
      std::set<brute::Labeled> got;
      for (const auto& eta : all) got.insert(brute::labeled(eta));
      ASSERT_EQ(got, brute::weighted_partitions(*m, bound));
      ASSERT_TRUE(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
        return a.size() < b.size() || (a.size() == b.size() && a < b);
      }));
    }
  }
  // Plain partition numbers 1,1,2,3,5,7,11 for a single label.
  const std::vector<std::uint64_t> p{1, 1, 2, 3, 5, 7, 11};
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(brute::count_weighted(n, n, 1, 0), p[n]);
}

TEST(Partition, JsonRoundTrip) {
  const auto m = ruled();
  const auto back = model_from_json(to_json(*m));
  EXPECT_EQ(to_json(*back), to_json(*m));
  const auto eta = wp(m, {{2, "f"}, {1, "pt"}, {1, "pt"}});
  EXPECT_EQ(partition_from_json(to_json(eta), m), eta);
  EXPECT_EQ(to_json(eta).dump(), R"([[2,"f"],[1,"pt"],[1,"pt"]])");
  EXPECT_THROW(partition_from_json(nlohmann::json::parse(R"([[1,"nope"]])"), m), InvalidModel);
}

TEST(Insertion, Rendering) {
  EXPECT_EQ(to_string(Insertion{1, make_element(builtin_model("P3"), "pt")}), "tau1(pt)");
  EXPECT_EQ(make_element(builtin_model("P3"), "L").codim(), 2);
}
