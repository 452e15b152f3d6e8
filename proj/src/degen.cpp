#include "pairblow/degen.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "pairblow/errors.hpp"
#include "pairblow/oracle.hpp"

namespace pairblow {

bool RelPFSymbol::is_trivial() const {
  return insertions.empty() && (!boundary || boundary->empty()) && cls.is_zero();
}

std::string RelPFSymbol::canonical() const {
  std::vector<std::string> ins;
  for (const auto& i : insertions) ins.push_back(to_string(i));
  std::sort(ins.begin(), ins.end());
  std::string out = "Z(" + geometry;
  if (!divisor.empty()) out += "/" + divisor;
  out += ";";
  for (std::size_t i = 0; i < ins.size(); ++i) out += (i ? "*" : "") + ins[i];
  if (!divisor.empty()) out += "|" + (boundary ? to_string(*boundary) : std::string());
  return out + ")_{" + to_string(cls) + "}";
}

QLaurent degeneration_coefficient(const WeightedPartition& eta) {
  const int sign = (eta.size() - eta.length()) % 2 == 0 ? 1 : -1;
  return QLaurent::monomial(Rational(sign) * Rational(zeta(eta)), -eta.size());
}

namespace {

Insertion ins(const GeometryPtr& g, int level, const std::string& label, std::set<Support> support = {}) {
  return Insertion{level, make_element(builtin_model(g->cohomology_model), label, std::move(support))};
}

CurveClass cls(const GeometryPtr& g, std::vector<SymForm> coords) { return make_class(g, std::move(coords)); }

}  // namespace

std::vector<std::string> setup_ids() {
  return {"lemma3.1", "lemma3.2", "lemma3.3", "lemma3.4", "lemma3.5", "lemma3.6",
          "lemma4.1", "lemma4.2", "lemma4.3", "lemma4.4", "pt0",      "curve0",
          "lemma3.3@P3", "lemma3.4@P3_blown", "lemma3.5@P3", "lemma3.6@P3_blown"};
}

Setup make_setup(const std::string& id) {
  using enum Support;
  const auto X = catalogue(kAbstractX);
  const auto Xp = catalogue(kXBlownPoint);
  const auto Xc = catalogue(kXBlownCurve);
  const auto P3 = catalogue(kP3);
  const auto P3b = catalogue(kP3Blown);
  const SymForm k = SymForm::symbol(std::string(kShiftSymbol));

  // Insertions pulled back from X, supported away from the center.
  const auto away_p = ins(X, 0, "gamma", {AwayFromP, AwayFromE});
  const auto away_c = ins(X, 0, "gamma", {AwayFromC, AwayFromE});
  const auto on_xp = ins(Xp, 0, "gamma", {AwayFromE});
  const auto on_xc = ins(Xc, 0, "gamma", {AwayFromE});

  const CurveClass B = cls(X, {1, 0});
  const CurveClass Bt = cls(Xp, {1, 0, 0});
  const CurveClass Bt_minus_e = cls(Xp, {1, 0, -1});
  const CurveClass Ct = cls(Xc, {1, 0, 0});
  const CurveClass Ct_minus_e = cls(Xc, {1, 0, -1});

  if (id == "lemma3.1") return {id, X, CenterKind::Point, B, {away_p}};
  if (id == "lemma3.2") return {id, Xp, CenterKind::DivisorE, Bt, {on_xp}};
  if (id == "lemma3.3") return {id, X, CenterKind::Point, B, {ins(X, 0, "pt"), away_p}};
  if (id == "lemma3.4") return {id, Xp, CenterKind::DivisorE, Bt_minus_e, {on_xp}};
  if (id == "lemma3.5") return {id, X, CenterKind::Point, B, {ins(X, 1, "pt"), away_p}};
  if (id == "lemma3.6") return {id, Xp, CenterKind::DivisorE, Bt_minus_e, {ins(Xp, 0, "E2neg"), on_xp}};
  if (id == "lemma4.1") return {id, X, CenterKind::Curve, B, {away_c}};
  if (id == "lemma4.2") return {id, Xc, CenterKind::DivisorE, Ct, {on_xc}};
  if (id == "lemma4.3") return {id, X, CenterKind::Curve, B, {ins(X, 0, "C"), away_c}};
  if (id == "lemma4.4") return {id, Xc, CenterKind::DivisorE, Ct_minus_e, {ins(Xc, 0, "E"), on_xc}};
  if (id == "pt0") return {id, Xp, CenterKind::DivisorE, cls(Xp, {1, 0, k}), {on_xp}};
  if (id == "curve0") return {id, Xc, CenterKind::DivisorE, cls(Xc, {1, 0, k}), {on_xc}};

  const CurveClass L = cls(P3, {1});
  const CurveClass F = cls(P3b, {1, 0});
  if (id == "lemma3.3@P3") {
    return {id, P3, CenterKind::Point, L, {ins(P3, 0, "pt"), ins(P3, 0, "pt", {AwayFromP, AwayFromE})}};
  }
  if (id == "lemma3.4@P3_blown") return {id, P3b, CenterKind::DivisorE, F, {ins(P3b, 0, "pt", {AwayFromE})}};
  if (id == "lemma3.5@P3") {
    return {id, P3, CenterKind::Point, L, {ins(P3, 1, "pt"), ins(P3, 0, "L", {AwayFromP, AwayFromE})}};
  }
  if (id == "lemma3.6@P3_blown") {
    return {id, P3b, CenterKind::DivisorE, F, {ins(P3b, 0, "E2neg"), ins(P3b, 0, "L", {AwayFromE})}};
  }
  throw InvalidModel("unknown setup '" + id + "'");
}

namespace {

Support matching_flag(CenterKind c) {
  switch (c) {
    case CenterKind::Point: return Support::AwayFromP;
    case CenterKind::Curve: return Support::AwayFromC;
    case CenterKind::DivisorE: return Support::AwayFromE;
  }
  return Support::AwayFromE;
}

Insertion move_to(const GeometryPtr& g, const Insertion& i) {
  const auto model = builtin_model(g->cohomology_model);
  if (!model->has(i.cls.label)) {
    throw UnsupportedInsertionSide(to_string(i) + " has no counterpart on " + g->name);
  }
  return Insertion{i.level, make_element(model, i.cls.label, i.cls.support)};
}

}  // namespace

Side resolve_side(const Degeneration& deg, const Insertion& i) {
  if (i.cls.support.contains(matching_flag(deg.center))) {
    (void)move_to(deg.large, i);
    return Side::Large;
  }
  if (i.cls.support.empty()) {
    (void)move_to(deg.small, i);
    return Side::Small;
  }
  throw UnsupportedInsertionSide(to_string(i) + ": support flags do not decide a side for a " +
                                 to_string(deg.center) + " degeneration");
}

SymbolicIdentity assemble(const Setup& setup, const AssembleOptions& opts) {
  const Degeneration deg = build_degeneration(setup.geometry, setup.center);
  std::vector<std::vector<Side>> sides;
  for (const auto& i : setup.insertions) sides.push_back({resolve_side(deg, i)});
  return assemble_markings(setup, sides, opts);
}

SymbolicIdentity assemble_markings(const Setup& setup, const std::vector<std::vector<Side>>& sides,
                                   const AssembleOptions& opts) {
  if (sides.size() != setup.insertions.size()) throw InvalidModel("one side list per insertion required");
  const Degeneration deg = build_degeneration(setup.geometry, setup.center);
  SymbolicIdentity out;
  out.name = setup.id;
  out.lhs = RelPFSymbol{setup.geometry->name, "", setup.insertions, std::nullopt, setup.total};
  if (opts.k_range && opts.k_range->second == opts.k_range->first) {
    out.lhs.cls = out.lhs.cls.substitute(std::string(kShiftSymbol), SymForm(static_cast<long long>(opts.k_range->first)));
  }

  const CurveClass beta1 = solve_class_constraints(deg.small, small_side_constraints(deg, setup.total));
  const std::string n_sym(kSizeSymbol), d_sym(kDegreeSymbol), k_sym(kShiftSymbol);

  std::size_t marking_count = 1;
  for (const auto& s : sides) marking_count *= s.size();
  std::vector<Side> choice(sides.size());
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx < sides.size()) {
      for (Side s : sides[idx]) {
        choice[idx] = s;
        rec(idx + 1);
      }
      return;
    }
    std::vector<Insertion> small_ins, large_ins;
    std::string suffix;
    for (std::size_t i = 0; i < choice.size(); ++i) {
      if (choice[i] == Side::Small) {
        small_ins.push_back(move_to(deg.small, setup.insertions[i]));
      } else {
        large_ins.push_back(move_to(deg.large, setup.insertions[i]));
      }
      suffix += choice[i] == Side::Small ? "s" : "l";
    }
    const std::string gate_name = marking_count > 1 ? setup.id + "[" + suffix + "]" : setup.id;
    auto k_range = opts.k_range;
    if (!k_range) k_range = std::make_pair(1, std::optional<int>());
    GateProblem gate = build_gate(gate_name, deg, setup.total, small_ins, k_range, opts.c_lower_bound);
    GateCertificate cert = solve_gate(gate, opts.enum_bound);
    auto audit = check_certificate(gate, cert);

    for (const auto& sol : cert.solutions) {
      for (const auto& eta : sol.partitions) {
        const SymForm size(static_cast<long long>(eta.size()));
        CurveClass small_cls = beta1.substitute(n_sym, size);
        CurveClass total = setup.total;
        SymForm degree = 0;
        if (sol.d && !sol.d_unbounded) {
          degree = SymForm(static_cast<long long>(*sol.d));
          small_cls = small_cls.substitute(d_sym, degree);
        } else if (sol.d_unbounded) {
          degree = SymForm::symbol(d_sym);
        }
        if (sol.k) {
          const SymForm kv(static_cast<long long>(*sol.k));
          small_cls = small_cls.substitute(k_sym, kv);
          total = total.substitute(k_sym, kv);
        }
        CurveClass large_cls = large_side_class(deg, total, size, degree);
        IdentityTerm term{degeneration_coefficient(eta),
                          eta,
                          sol.d,
                          sol.d_unbounded,
                          sol.c,
                          RelPFSymbol{deg.small->name, deg.small_divisor, small_ins, eta, small_cls},
                          RelPFSymbol{deg.large->name, deg.large_divisor, large_ins, dual_partition(eta), large_cls}};
        out.terms.push_back(std::move(term));
      }
    }
    out.gates.push_back({std::move(gate), std::move(cert), std::move(audit)});
  };
  rec(0);
  return out;
}

RatioResult cancel_pair(const SymbolicIdentity& x, const SymbolicIdentity& xt) {
  for (const auto* id : {&x, &xt}) {
    if (id->terms.size() != 1) {
      throw NoCommonFactor(id->name + " has " + std::to_string(id->terms.size()) +
                           " terms; cancellation needs exactly one");
    }
  }
  const auto& a = x.terms.front();
  const auto& b = xt.terms.front();
  if (a.large.canonical() != b.large.canonical()) {
    throw NoCommonFactor("large factors differ: " + a.large.canonical() + " vs " + b.large.canonical());
  }
  return RatioResult{Fraction{divide_exact(a.coefficient, b.coefficient), a.small, b.small}, std::nullopt};
}

RatioResult with_specialization(RatioResult generic, const SymbolicIdentity& x_spec,
                                const SymbolicIdentity& xt_spec) {
  const RatioResult spec = cancel_pair(x_spec, xt_spec);
  const auto& g = generic.relative;
  const auto& s = spec.relative;
  if (g.num.canonical() != s.num.canonical() || g.den.canonical() != s.den.canonical() || !(g.factor == s.factor)) {
    throw NoCommonFactor("specialization " + x_spec.name + "/" + xt_spec.name +
                         " does not reproduce the relative ratio");
  }
  // Both left sides are coefficient * small * (shared large factor), so
  // their quotient is the relative ratio itself.
  generic.absolute = Fraction{QLaurent::constant(1), x_spec.lhs, xt_spec.lhs};
  return generic;
}

QLaurent substitute_oracle(const RatioResult& ratio, const OracleTable& table, std::string* form_used) {
  std::vector<std::pair<std::string, const Fraction*>> forms{{"relative", &ratio.relative}};
  if (ratio.absolute) forms.emplace_back("absolute", &*ratio.absolute);
  std::vector<std::string> missing;
  for (const auto& [name, f] : forms) {
    auto value = [&](const RelPFSymbol& s) -> std::optional<QLaurent> {
      if (s.is_trivial()) return QLaurent::constant(1);
      if (const auto* e = table.find(s.canonical())) return e->value;
      missing.push_back(s.canonical());
      return std::nullopt;
    };
    const auto num = value(f->num);
    const auto den = value(f->den);
    if (!num || !den) continue;
    if (form_used) *form_used = name;
    return f->factor * divide_exact(*num, *den);
  }
  std::string msg = "no oracle value for";
  for (const auto& m : missing) msg += " " + m;
  throw MissingOracle(msg);
}

nlohmann::json to_json(const IdentityTerm& t) {
  return {{"eta", to_json(t.eta)},
          {"eta_dual", to_json(dual_partition(t.eta))},
          {"d", t.d ? nlohmann::json(*t.d) : nlohmann::json(nullptr)},
          {"d_unbounded", t.d_unbounded},
          {"c", t.c ? nlohmann::json(*t.c) : nlohmann::json(nullptr)},
          {"coefficient", to_string(t.coefficient)},
          {"small", t.small.canonical()},
          {"large", t.large.canonical()}};
}

nlohmann::json to_json(const SymbolicIdentity& id) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : id.terms) terms.push_back(to_json(t));
  return {{"name", id.name}, {"lhs", id.lhs.canonical()}, {"terms", terms}};
}

nlohmann::json to_json(const Fraction& f) {
  return {{"factor", to_string(f.factor)},
          {"num", f.num.is_trivial() ? "1" : f.num.canonical()},
          {"den", f.den.is_trivial() ? "1" : f.den.canonical()}};
}

nlohmann::json to_json(const RatioResult& r) {
  return {{"relative", to_json(r.relative)},
          {"absolute", r.absolute ? to_json(*r.absolute) : nlohmann::json(nullptr)}};
}

std::string render_text(const SymbolicIdentity& id) {
  std::ostringstream out;
  out << id.name << ": " << id.lhs.canonical() << " =";
  if (id.terms.empty()) out << " 0";
  for (std::size_t i = 0; i < id.terms.size(); ++i) {
    const auto& t = id.terms[i];
    out << (i ? "\n    + " : " ") << "(" << to_string(t.coefficient) << ")";
    if (!t.small.is_trivial()) out << " * " << t.small.canonical();
    if (!t.large.is_trivial()) out << " * " << t.large.canonical();
    if (t.d) out << "  [d" << (t.d_unbounded ? ">=" : "=") << *t.d << (t.c ? ", c=" + std::to_string(*t.c) : "") << "]";
  }
  return out.str();
}

}  // namespace pairblow
