#include "pairblow/dimsolve.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "pairblow/errors.hpp"

namespace pairblow {

int insertion_codim_sum(const std::vector<Insertion>& insertions) {
  int total = 0;
  for (const auto& ins : insertions) total += ins.cls.codim() + ins.level - 1;
  return total;
}

int vdim_relative_gap(const WeightedPartition& eta) {
  return dual_codim_sum(eta) - eta.length() + eta.size();
}

bool operator==(const GateProblem& a, const GateProblem& b) {
  const bool same_surface = (a.surface == nullptr) == (b.surface == nullptr) &&
                            (!a.surface || to_json(*a.surface) == to_json(*b.surface));
  return a.name == b.name && a.coef_S == b.coef_S && a.coef_n == b.coef_n &&
         a.coef_dc == b.coef_dc && a.coef_k == b.coef_k && a.rhs_const == b.rhs_const &&
         a.k_range == b.k_range && a.c_lower_bound == b.c_lower_bound && same_surface;
}

std::string equation_string(const GateProblem& p) {
  std::ostringstream out;
  out << p.coef_S << "*S + " << p.coef_n << "*n";
  if (p.coef_dc != 0) out << " + " << p.coef_dc << "*d*c";
  if (p.coef_k != 0) out << " + " << p.coef_k << "*k";
  out << " = ell + " << p.rhs_const;
  return out.str();
}

namespace {

int to_int_coefficient(const Rational& r, const std::string& what) {
  if (!is_integer(r)) throw InvalidGate(what + " has a non-integral coefficient");
  return static_cast<int>(to_integer(r));
}

}  // namespace

GateProblem build_gate(std::string name, const Degeneration& deg, const CurveClass& total,
                       const std::vector<Insertion>& small_insertions,
                       std::optional<std::pair<int, std::optional<int>>> k_range,
                       std::optional<int> c_lower_bound) {
  const CurveClass beta1 = solve_class_constraints(deg.small, small_side_constraints(deg, total));
  const SymForm n = SymForm::symbol(std::string(kSizeSymbol));
  const SymForm form =
      c1_pair(*deg.small, beta1) - n - SymForm(static_cast<long long>(insertion_codim_sum(small_insertions)));

  GateProblem p;
  p.name = std::move(name);
  p.surface = deg.surface;
  const SymForm::Monomial dc{std::string(kC1Symbol), std::string(kDegreeSymbol)};
  for (const auto& [mono, coef] : form.terms()) {
    const int v = to_int_coefficient(coef, "gate form " + to_string(form));
    if (mono.empty()) {
      p.rhs_const = -v;
    } else if (mono == SymForm::Monomial{std::string(kSizeSymbol)}) {
      p.coef_n = v;
    } else if (mono == SymForm::Monomial{std::string(kShiftSymbol)}) {
      p.coef_k = v;
    } else if (mono == dc) {
      p.coef_dc = v;
    } else {
      throw InvalidGate("unexpected term in gate form " + to_string(form));
    }
  }
  if (p.coef_k != 0) p.k_range = k_range;
  if (p.coef_dc != 0) p.c_lower_bound = c_lower_bound;
  return p;
}

bool satisfies(const GateProblem& p, int ell, int size, int S, int k, int d, int c) {
  const long long lhs = static_cast<long long>(p.coef_S) * S + static_cast<long long>(p.coef_n) * size +
                        static_cast<long long>(p.coef_dc) * d * c + static_cast<long long>(p.coef_k) * k;
  return lhs == static_cast<long long>(ell) + p.rhs_const;
}

namespace {

void validate(const GateProblem& p) {
  if (!p.surface) throw InvalidGate(p.name + ": no surface model");
  if (p.coef_S < 0) throw InvalidGate(p.name + ": negative S coefficient");
  if (p.coef_k < 0) throw InvalidGate(p.name + ": negative k coefficient");
  if (p.coef_dc < 0) throw InvalidGate(p.name + ": negative d*c coefficient");
  if (p.coef_k != 0 && !p.k_range) throw InvalidGate(p.name + ": k term without a k range");
  if (p.k_range && p.k_range->second && *p.k_range->second < p.k_range->first) {
    throw InvalidGate(p.name + ": empty k range");
  }
  if (p.coef_dc != 0 && p.c0() < 0) throw InvalidGate(p.name + ": c lower bound must be >= 0");
  if (p.coef_n <= 1) {
    throw DominanceFails(p.name + ": |eta| coefficient " + std::to_string(p.coef_n) +
                         " <= 1, lhs - rhs is not forced to grow with |eta|");
  }
}

int k_low(const GateProblem& p) { return p.coef_k != 0 ? p.k_range->first : 0; }

// Smallest x >= lo with a*x - b > 0, for a > 0.
int first_positive(int a, int b, int lo) {
  int x = b >= 0 ? b / a + 1 : 0;
  return std::max(x, lo);
}

std::vector<PartShape> shapes_for(int ell, int size, int S, int max_codim) {
  std::vector<PartShape> out;
  PartShape cur;
  // Parts in nonincreasing (size, codim) order.
  std::function<void(int, int, int, std::pair<int, int>)> rec = [&](int left, int sz, int cd,
                                                                    std::pair<int, int> cap) {
    if (left == 0) {
      if (sz == 0 && cd == 0) out.push_back(cur);
      return;
    }
    for (int s = std::min(sz, cap.first); s >= 1; --s) {
      const int cmax = s == cap.first ? cap.second : max_codim;
      for (int c = std::min(cd, cmax); c >= 0; --c) {
        if (sz - s < left - 1) continue;
        cur.emplace_back(s, c);
        rec(left - 1, sz - s, cd - c, {s, c});
        cur.pop_back();
      }
    }
  };
  rec(ell, size, S, {size, max_codim});
  return out;
}

std::vector<WeightedPartition> realize(const CohModelPtr& model, const PartShape& shape) {
  std::vector<std::vector<std::string>> choices;
  for (const auto& [size, codim] : shape) {
    std::vector<std::string> labels;
    for (const auto& e : model->elements()) {
      if (model->codim(model->dual(e.label)) == codim) labels.push_back(e.label);
    }
    if (labels.empty()) return {};
    choices.push_back(std::move(labels));
  }
  std::set<WeightedPartition> out;
  std::vector<Part> parts(shape.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == shape.size()) {
      out.insert(WeightedPartition(model, parts));
      return;
    }
    for (const auto& label : choices[i]) {
      parts[i] = Part{shape[i].first, label};
      rec(i + 1);
    }
  };
  rec(0);
  return {out.begin(), out.end()};
}

std::string form(std::initializer_list<std::pair<long long, const char*>> terms, long long constant) {
  SymForm f(constant);
  for (const auto& [coef, sym] : terms) f = f + SymForm(coef) * SymForm::symbol(sym);
  return to_string(f);
}

std::vector<ChainStep> build_chain(const GateProblem& p, int n_from, std::optional<int> k_from) {
  const long long s = p.coef_S, an = p.coef_n, adc = p.coef_dc, ak = p.coef_k, b = p.rhs_const;
  std::vector<ChainStep> chain;
  chain.push_back({"lhs - rhs", form({{s, "S"}, {an, "n"}, {adc, "dc"}, {ak, "k"}, {-1, "ell"}}, -b)});
  if (s != 0) chain.push_back({"S >= 0", form({{an, "n"}, {adc, "dc"}, {ak, "k"}, {-1, "ell"}}, -b)});
  if (adc != 0) chain.push_back({"d >= 0 and c >= 0", form({{an, "n"}, {ak, "k"}, {-1, "ell"}}, -b)});
  chain.push_back({"ell <= n", form({{an - 1, "n"}, {ak, "k"}}, -b)});
  const long long klo = k_low(p);
  if (ak != 0) chain.push_back({"k >= " + std::to_string(klo), form({{an - 1, "n"}}, ak * klo - b)});
  const long long at_tail = (an - 1) * n_from + ak * klo - b;
  chain.push_back({"n >= " + std::to_string(n_from), std::to_string(at_tail)});
  chain.push_back({"conclusion", std::to_string(at_tail) + " > 0"});
  if (k_from) {
    chain.push_back({"k tail: ell <= n, n >= 0", form({{ak, "k"}}, -b)});
    const long long at_k = ak * *k_from - b;
    chain.push_back({"k tail: k >= " + std::to_string(*k_from), std::to_string(at_k)});
    chain.push_back({"k tail: conclusion", std::to_string(at_k) + " > 0"});
  }
  return chain;
}

auto solution_key(const GateSolution& s) {
  return std::make_tuple(s.ell, s.size, s.S, s.d.value_or(-1), s.d_unbounded, s.k.value_or(0));
}

}  // namespace

GateCertificate solve_gate(const GateProblem& p, int enum_bound) {
  if (enum_bound < 1) throw InvalidGate("enumeration bound must be >= 1");
  validate(p);
  const int b = p.rhs_const;
  const int klo = k_low(p);

  GateCertificate cert;
  const int n_star = first_positive(p.coef_n - 1, b - p.coef_k * klo, 0);
  cert.enumerated_up_to = std::max(enum_bound, n_star - 1);
  cert.tail_n_from = cert.enumerated_up_to + 1;

  std::vector<std::optional<int>> ks;
  if (p.coef_k == 0) {
    ks.push_back(std::nullopt);
  } else {
    const auto& khi = p.k_range->second;
    int last = khi.value_or(0);
    if (!khi) {
      cert.tail_k_from = first_positive(p.coef_k, b, klo);
      last = *cert.tail_k_from - 1;
    }
    for (int k = klo; k <= last; ++k) ks.push_back(k);
  }

  const int c0 = p.c0();
  const int max_codim = p.surface->dim();
  for (int n = 0; n <= cert.enumerated_up_to; ++n) {
    for (int ell = n == 0 ? 0 : 1; ell <= n; ++ell) {
      for (int S = 0; S <= max_codim * ell; ++S) {
        for (const auto& k : ks) {
          const int R = ell + b - p.coef_S * S - p.coef_n * n - p.coef_k * k.value_or(0);
          std::vector<GateSolution> found;
          GateSolution base{.ell = ell, .size = n, .S = S, .k = k};
          if (p.coef_dc == 0) {
            if (R == 0) found.push_back(base);
          } else if (R == 0) {
            base.d = 0;
            found.push_back(base);
            if (c0 == 0) {
              GateSolution free = base;
              free.d = 1;
              free.d_unbounded = true;
              free.c = 0;
              found.push_back(free);
            }
          } else if (R > 0 && R % p.coef_dc == 0) {
            const int P = R / p.coef_dc;
            for (int d = 1; d <= P; ++d) {
              if (P % d != 0 || P / d < c0) continue;
              GateSolution s = base;
              s.d = d;
              s.c = P / d;
              found.push_back(s);
            }
          }
          if (found.empty()) continue;
          std::vector<PartShape> shapes;
          std::vector<WeightedPartition> parts;
          for (auto& shape : shapes_for(ell, n, S, max_codim)) {
            auto concrete = realize(p.surface, shape);
            if (concrete.empty()) continue;
            shapes.push_back(shape);
            parts.insert(parts.end(), concrete.begin(), concrete.end());
          }
          if (parts.empty()) continue;
          std::sort(parts.begin(), parts.end());
          for (auto& s : found) {
            s.shapes = shapes;
            s.partitions = parts;
            cert.solutions.push_back(std::move(s));
          }
        }
      }
    }
  }
  std::stable_sort(cert.solutions.begin(), cert.solutions.end(),
                   [](const GateSolution& a, const GateSolution& b) { return solution_key(a) < solution_key(b); });
  cert.chain = build_chain(p, cert.tail_n_from, cert.tail_k_from);
  return cert;
}

namespace {

// Closed-below, possibly unbounded-above interval; only lower bounds of
// nonnegative combinations are needed, negative scales flip to the upper end.
struct Interval {
  Rational lo;
  std::optional<Rational> hi;  // empty = +infinity
};

// Lower bound of sum coef_i * x_i; empty = -infinity.
std::optional<Rational> lower_bound(const std::vector<std::pair<Rational, Interval>>& terms) {
  Rational total = 0;
  for (const auto& [coef, iv] : terms) {
    if (coef >= 0) {
      total += coef * iv.lo;
    } else {
      if (!iv.hi) return std::nullopt;
      total += coef * *iv.hi;
    }
  }
  return total;
}

std::string describe(const GateSolution& s) {
  std::string out = "(ell=" + std::to_string(s.ell) + ", n=" + std::to_string(s.size) + ", S=" +
                    std::to_string(s.S) + ")";
  return out;
}

}  // namespace

std::vector<std::string> check_certificate(const GateProblem& p, const GateCertificate& cert) {
  std::vector<std::string> failures;
  const int c0 = p.c0();
  for (const auto& s : cert.solutions) {
    const int k = s.k.value_or(0);
    if ((p.coef_k != 0) != s.k.has_value()) failures.push_back(describe(s) + ": k presence mismatch");
    if (s.k && p.k_range &&
        (*s.k < p.k_range->first || (p.k_range->second && *s.k > *p.k_range->second))) {
      failures.push_back(describe(s) + ": k outside range");
    }
    const int d = s.d.value_or(0);
    std::vector<int> cs = s.c ? std::vector<int>{*s.c} : std::vector<int>{c0, c0 + 1};
    for (int c : cs) {
      if (c < c0) failures.push_back(describe(s) + ": c below bound");
      if (!satisfies(p, s.ell, s.size, s.S, k, d, c)) failures.push_back(describe(s) + ": equation fails");
      if (s.d_unbounded && !satisfies(p, s.ell, s.size, s.S, k, d + 1, c)) {
        failures.push_back(describe(s) + ": equation fails for larger d");
      }
    }
    if (s.ell > s.size || (s.size == 0) != (s.ell == 0) || s.S < 0 || s.S > 2 * s.ell) {
      failures.push_back(describe(s) + ": side conditions fail");
    }
    for (const auto& eta : s.partitions) {
      if (eta.size() != s.size || eta.length() != s.ell || dual_codim_sum(eta) != s.S) {
        failures.push_back(describe(s) + ": partition " + to_string(eta) + " does not match");
      }
    }
    if (s.partitions.empty()) failures.push_back(describe(s) + ": no concrete partition");
  }

  // Tail: lhs - rhs = cS*S + (cn-1)*n + t + cdc*(d*c) + ck*k - b with t = n - ell.
  const Interval nonneg{0, std::nullopt};
  const Interval k_iv = p.coef_k == 0 ? Interval{0, Rational(0)}
                                      : Interval{p.k_range->first, p.k_range->second
                                                                       ? std::optional<Rational>(*p.k_range->second)
                                                                       : std::nullopt};
  auto tail_bound = [&](const Interval& n_iv, const Interval& kk) {
    return lower_bound({{Rational(p.coef_S), nonneg},
                        {Rational(p.coef_n - 1), n_iv},
                        {Rational(1), nonneg},
                        {Rational(p.coef_dc), nonneg},
                        {Rational(p.coef_k), kk},
                        {Rational(-p.rhs_const), Interval{1, Rational(1)}}});
  };
  if (cert.tail_n_from != cert.enumerated_up_to + 1) failures.push_back("tail does not start after enumeration");
  const auto lb = tail_bound(Interval{cert.tail_n_from, std::nullopt}, k_iv);
  if (!lb || *lb <= 0) failures.push_back("tail bound for n >= " + std::to_string(cert.tail_n_from) + " is not positive");
  if (cert.tail_k_from) {
    if (p.coef_k == 0) {
      failures.push_back("k tail without a k term");
    } else {
      const auto lbk = tail_bound(nonneg, Interval{*cert.tail_k_from, std::nullopt});
      if (!lbk || *lbk <= 0) failures.push_back("k tail bound is not positive");
    }
  } else if (p.coef_k != 0 && !p.k_range->second) {
    failures.push_back("unbounded k range without a k tail");
  }
  for (const auto& s : cert.solutions) {
    if (s.size > cert.enumerated_up_to) failures.push_back(describe(s) + ": beyond enumeration");
    if (s.k && cert.tail_k_from && *s.k >= *cert.tail_k_from) failures.push_back(describe(s) + ": inside k tail");
  }
  return failures;
}

namespace {

nlohmann::json range_json(const std::optional<std::pair<int, std::optional<int>>>& r) {
  if (!r) return nullptr;
  return nlohmann::json::array({r->first, r->second ? nlohmann::json(*r->second) : nlohmann::json(nullptr)});
}

}  // namespace

nlohmann::json to_json(const GateProblem& p) {
  nlohmann::json surface;
  if (p.surface && (p.surface->name() == "P2" || p.surface->name() == "ruled")) {
    surface = p.surface->name();
  } else if (p.surface) {
    surface = to_json(*p.surface);
  }
  return {{"name", p.name},
          {"lhs", {{"S", p.coef_S}, {"eta", p.coef_n}, {"dc", p.coef_dc}, {"k", p.coef_k}}},
          {"rhs", {{"ell", 1}, {"const", p.rhs_const}}},
          {"k_range", range_json(p.k_range)},
          {"c_lower_bound", p.c_lower_bound ? nlohmann::json(*p.c_lower_bound) : nlohmann::json(nullptr)},
          {"surface_model", surface}};
}

GateProblem gate_from_json(const nlohmann::json& j) {
  GateProblem p;
  try {
    p.name = j.value("name", std::string("gate"));
    const auto& lhs = j.at("lhs");
    p.coef_S = lhs.value("S", 0);
    p.coef_n = lhs.value("eta", 0);
    p.coef_dc = lhs.value("dc", 0);
    p.coef_k = lhs.value("k", 0);
    const auto& rhs = j.at("rhs");
    if (rhs.value("ell", 1) != 1) throw InvalidGate(p.name + ": rhs must carry ell with coefficient 1");
    p.rhs_const = rhs.value("const", 0);
    if (j.contains("k_range") && !j.at("k_range").is_null()) {
      const auto& r = j.at("k_range");
      if (!r.is_array() || r.size() != 2) throw ParseError("k_range must be [lo, hi|null]");
      p.k_range = std::make_pair(r[0].get<int>(), r[1].is_null() ? std::nullopt : std::optional<int>(r[1].get<int>()));
    }
    if (j.contains("c_lower_bound") && !j.at("c_lower_bound").is_null()) {
      p.c_lower_bound = j.at("c_lower_bound").get<int>();
    }
    const auto& s = j.at("surface_model");
    p.surface = s.is_string() ? builtin_model(s.get<std::string>()) : model_from_json(s);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("gate JSON: ") + e.what());
  } catch (const InvalidModel& e) {
    throw ParseError(std::string("gate JSON: ") + e.what());
  }
  return p;
}

nlohmann::json to_json(const GateCertificate& c) {
  nlohmann::json sols = nlohmann::json::array();
  for (const auto& s : c.solutions) {
    nlohmann::json shapes = nlohmann::json::array();
    for (const auto& shape : s.shapes) {
      nlohmann::json js = nlohmann::json::array();
      for (const auto& [size, codim] : shape) js.push_back({size, codim});
      shapes.push_back(js);
    }
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& eta : s.partitions) parts.push_back(to_json(eta));
    sols.push_back({{"ell", s.ell},
                    {"size", s.size},
                    {"S", s.S},
                    {"k", s.k ? nlohmann::json(*s.k) : nlohmann::json(nullptr)},
                    {"d", s.d ? nlohmann::json(*s.d) : nlohmann::json(nullptr)},
                    {"d_unbounded", s.d_unbounded},
                    {"c", s.c ? nlohmann::json(*s.c) : nlohmann::json(nullptr)},
                    {"shapes", shapes},
                    {"partitions", parts}});
  }
  nlohmann::json chain = nlohmann::json::array();
  for (const auto& step : c.chain) chain.push_back({{"step", step.justification}, {"bound", step.bound}});
  return {{"verdict", c.empty() ? "Empty" : "SolutionSet"},
          {"solutions", sols},
          {"enumerated_up_to", c.enumerated_up_to},
          {"tail", {{"n_from", c.tail_n_from},
                    {"k_from", c.tail_k_from ? nlohmann::json(*c.tail_k_from) : nlohmann::json(nullptr)}}},
          {"chain", chain}};
}

namespace {

std::optional<int> opt_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<int>();
}

}  // namespace

GateCertificate certificate_from_json(const nlohmann::json& j, const CohModelPtr& surface) {
  try {
    GateCertificate c;
    for (const auto& js : j.at("solutions")) {
      GateSolution s;
      s.ell = js.at("ell").get<int>();
      s.size = js.at("size").get<int>();
      s.S = js.at("S").get<int>();
      s.k = opt_int(js, "k");
      s.d = opt_int(js, "d");
      s.d_unbounded = js.value("d_unbounded", false);
      s.c = opt_int(js, "c");
      for (const auto& shape : js.at("shapes")) {
        PartShape ps;
        for (const auto& part : shape) ps.emplace_back(part.at(0).get<int>(), part.at(1).get<int>());
        s.shapes.push_back(std::move(ps));
      }
      for (const auto& eta : js.at("partitions")) s.partitions.push_back(partition_from_json(eta, surface));
      c.solutions.push_back(std::move(s));
    }
    c.enumerated_up_to = j.at("enumerated_up_to").get<int>();
    c.tail_n_from = j.at("tail").at("n_from").get<int>();
    c.tail_k_from = opt_int(j.at("tail"), "k_from");
    for (const auto& step : j.at("chain")) {
      c.chain.push_back({step.at("step").get<std::string>(), step.at("bound").get<std::string>()});
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate JSON: ") + e.what());
  }
}

std::string render_text(const GateProblem& p, const GateCertificate& c) {
  std::ostringstream out;
  out << "gate " << p.name << ": " << equation_string(p);
  if (p.k_range) {
    out << ", k in [" << p.k_range->first << ", "
        << (p.k_range->second ? std::to_string(*p.k_range->second) : std::string("inf")) << "]";
  }
  if (p.coef_dc != 0) out << ", c >= " << p.c0();
  out << "\n  verdict: " << (c.empty() ? "Empty" : "SolutionSet") << " (|eta| <= " << c.enumerated_up_to
      << " enumerated)\n";
  for (const auto& s : c.solutions) {
    out << "  solution ell=" << s.ell << " |eta|=" << s.size << " S=" << s.S;
    if (s.k) out << " k=" << *s.k;
    if (s.d) out << " d" << (s.d_unbounded ? ">=" : "=") << *s.d;
    if (s.c) out << " c=" << *s.c;
    out << " eta in {";
    for (std::size_t i = 0; i < s.partitions.size(); ++i) {
      out << (i ? ", " : "") << (s.partitions[i].empty() ? "empty" : to_string(s.partitions[i]));
    }
    out << "}\n";
  }
  for (const auto& step : c.chain) out << "  " << step.justification << ": " << step.bound << "\n";
  return out.str();
}

}  // namespace pairblow
