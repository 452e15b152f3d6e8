// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>

#include "brute.hpp"
#include "gates.hpp"
#include "pairblow/degen.hpp"
#include "pairblow/errors.hpp"
#include "pairblow/oracle.hpp"
#include "pairblow/verify.hpp"

using namespace pairblow;

namespace {

struct Failure {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

QLaurent q() { return QLaurent::q(); }
QLaurent one() { return QLaurent::constant(1); }

void vanishing() {
  const auto table = default_oracle_table();
  for (const char* id : {"pt0", "curve0"}) {
    const auto t = verify({.theorem = id, .k_range = {1, 5}}, table);
    require(t.status == 0, std::string(id) + " status " + std::to_string(t.status));
    require(t.result == "0", std::string(id) + " result is not 0");
    require(t.gates.size() == 6, std::string(id) + ": expected 5 fixed-k gates and one symbolic gate");
    for (const auto& g : t.gates) {
      require(g["certificate"]["verdict"] == "Empty", std::string(id) + ": non-empty certificate");
      require(g["audit"].empty(), std::string(id) + ": certificate audit failed");
    }
    const auto& sym = t.gates.back();
    require(sym["problem"]["k_range"][1].is_null(), std::string(id) + ": last gate is not the k >= 1 gate");
    require(!sym["certificate"]["tail"]["k_from"].is_null(), std::string(id) + ": symbolic gate lacks a k tail");
  }
}

void admissible_sets() {
  using Set = std::set<std::pair<std::string, int>>;
  const std::map<std::string, std::pair<Set, std::optional<int>>> expected{
      {"lemma3.1", {{{"", -1}}, std::nullopt}},      {"lemma3.2", {{{"", -1}}, std::nullopt}},
      {"lemma3.3", {{{"(1,pt)", -1}}, std::nullopt}}, {"lemma3.4", {{{"(1,pt)", -1}}, std::nullopt}},
      {"lemma3.5", {{{"(1,L)", -1}}, std::nullopt}},  {"lemma3.6", {{{"(1,L)", -1}}, std::nullopt}},
      {"lemma4.1", {{{"", 0}}, 1}},                   {"lemma4.2", {{{"", 0}}, 1}},
      {"lemma4.3", {{{"(1,pt)", 0}}, 2}},             {"lemma4.4", {{{"(1,pt)", 0}}, 2}},
  };
  for (const auto& [id, data] : expected) {
    const auto ident = assemble(make_setup(id), {std::nullopt, data.second, 6});
    Set got;
    for (const auto& g : ident.gates) {
      for (const auto& s : g.certificate.solutions) {
        for (const auto& eta : s.partitions) got.insert({to_string(eta), s.d.value_or(-1)});
      }
    }
    require(got == data.first, id + ": admissible set differs");
  }
}

void closed_formulas() {
  const auto table = default_oracle_table();
  const std::map<std::string, QLaurent> expected{
      {"pt1", one()},
      {"pt2", (one() + q()) * (one() + q())},
      {"pt3", QLaurent::constant(Rational(1, 2)) * (one() - q() * q())},
      {"curve1", one()},
      {"curve2", one() + q()},
  };
  for (const auto& [id, value] : expected) {
    const auto t = verify({.theorem = id}, table);
    require(t.status == 0, id + " status " + std::to_string(t.status));
    require(t.result && parse_qlaurent(*t.result) == value, id + " factor differs");
  }
}

void sharpness() {
  const auto t = verify({.theorem = "curve2", .c_bound = 1}, default_oracle_table());
  require(t.status == 1, "curve2 with c >= 1 did not report a mismatch");
  bool extra = false;
  for (const auto& g : t.gates) {
    for (const auto& s : g["certificate"]["solutions"]) {
      if (s["size"] == 0 && s["d"] == 1) extra = true;
    }
  }
  require(extra, "no (empty, d=1) solution in the c >= 1 certificate");
  const auto tight = verify({.theorem = "curve2", .c_bound = 2}, default_oracle_table());
  require(tight.status == 0, "curve2 with c >= 2 did not verify");
}

void brute_force() {
  auto gates = all_setup_gates();
  for (const auto& entry : std::filesystem::directory_iterator(std::string(PAIRBLOW_DATA_DIR) + "/gates")) {
    std::ifstream in(entry.path());
    const auto p = gate_from_json(nlohmann::json::parse(in));
    if (p.coef_n > 1) gates.push_back(p);
  }
  for (const auto& p : gates) {
    const auto cert = solve_gate(p, 6);
    require(check_certificate(p, cert).empty(), p.name + ": audit failed");
    require(brute::from_certificate(cert, 6) == brute::admitted(p, 6), p.name + ": brute force disagrees");
  }
}

void combinatorics() {
  std::mt19937 rng(500);
  std::uniform_int_distribution<int> len(0, 6), size(1, 3);
  for (int i = 0; i < 500; ++i) {
    const auto m = builtin_model(i % 2 ? "P2" : "ruled");
    std::uniform_int_distribution<std::size_t> label(0, m->elements().size() - 1);
    std::vector<Part> parts;
    for (int j = len(rng); j > 0; --j) parts.push_back({size(rng), m->elements()[label(rng)].label});
    const WeightedPartition eta(m, parts);
    const auto lab = brute::labeled(eta);
    std::uint64_t z = brute::aut_by_permutations(lab);
    for (const auto& p : lab) z *= p.first;
    require(zeta(eta) == z, "zeta mismatch for " + to_string(eta));
    require(dual_partition(dual_partition(eta)) == eta, "dual is not an involution");
    int both = 0;
    for (const auto& [s, l] : lab) both += m->codim(l) + m->codim(m->dual(l));
    require(both == 2 * eta.length(), "codim complementarity fails");
  }
}

void coefficient_audit() {
  int audited = 0;
  for (const auto& id : setup_ids()) {
    for (int c0 : {0, 1, 2}) {
      std::vector<AssembleOptions> variants{{std::nullopt, c0, 6}};
      if (id == "pt0" || id == "curve0") {
        variants.clear();
        for (int k = 1; k <= 5; ++k) variants.push_back({std::make_pair(k, k), c0, 6});
      }
      for (const auto& opts : variants) {
        for (const auto& t : assemble(make_setup(id), opts).terms) {
          const auto lab = brute::labeled(t.eta);
          long long z = static_cast<long long>(brute::aut_by_permutations(lab));
          int n = 0;
          for (const auto& p : lab) {
            z *= p.first;
            n += p.first;
          }
          const long long sign = (n - static_cast<int>(lab.size())) % 2 ? -1 : 1;
          require(t.coefficient == QLaurent::monomial(Rational(sign * z), -n), id + ": coefficient differs");
          ++audited;
        }
      }
    }
  }
  require(audited > 0, "no terms audited");
}

QLaurent random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(-3, 3), num(-6, 6), den(1, 5), terms(0, 4);
  QLaurent out;
  for (int i = terms(rng); i > 0; --i) out = out + QLaurent::monomial(Rational(num(rng), den(rng)), e(rng));
  return out;
}

void laurent_ring() {
  std::mt19937 rng(1000);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    require((a * b) * c == a * (b * c), "associativity");
    require((a + b) + c == a + (b + c), "additive associativity");
    require(a * (b + c) == a * b + a * c, "distributivity");
  }
  int done = 0;
  while (done < 200) {
    const auto a = random_laurent(rng), b = random_laurent(rng);
    if (b.is_zero()) continue;
    require(divide_exact(a * b, b) == a, "divide_exact(a*b, b) != a");
    ++done;
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria{
      {"1 vanishing: pt0 and curve0 Empty for k = 1..5 and for all k >= 1", vanishing},
      {"2 admissible sets of the point and curve degenerations", admissible_sets},
      {"3 closed formulas 1, (1+q)^2, (1-q^2)/2, 1, 1+q", closed_formulas},
      {"4 hypothesis sharpness: c >= 1 adds (empty, d=1) and fails", sharpness},
      {"5 brute-force equivalence for every gate, |eta| <= 6", brute_force},
      {"6 combinatorics: zeta, dual involution, codim complementarity (500 random)", combinatorics},
      {"7 degeneration coefficient audit", coefficient_audit},
      {"8 Laurent ring axioms (1000 triples) and exact division (200)", laurent_ring},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    try {
      run();
      std::cout << "PASS " << name << "\n";
    } catch (const Failure& f) {
      ++failed;
      std::cout << "FAIL " << name << ": " << f.why << "\n";
    } catch (const std::exception& e) {
      ++failed;
      std::cout << "FAIL " << name << ": exception: " << e.what() << "\n";
    }
  }
  return failed == 0 ? 0 : 1;
}
