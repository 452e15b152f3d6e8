#include "pairblow/geomcat.hpp"

#include <algorithm>
#include <mutex>

#include "pairblow/errors.hpp"

namespace pairblow {

const DivisorFunctional& ThreeFoldGeometry::divisor(std::string_view div) const {
  for (const auto& d : divisors) {
    if (d.name == div) return d;
  }
  throw InvalidModel(name + " has no divisor '" + std::string(div) + "'");
}

bool ThreeFoldGeometry::has_divisor(std::string_view div) const {
  return std::any_of(divisors.begin(), divisors.end(),
                     [&](const DivisorFunctional& d) { return d.name == div; });
}

namespace {

SymForm sym(std::string_view name) { return SymForm::symbol(std::string(name)); }

std::vector<GeometryPtr> build_catalogue() {
  std::vector<GeometryPtr> out;
  auto add = [&](ThreeFoldGeometry g) {
    if (g.free_parameter_names.empty()) g.free_parameter_names.assign(g.h2_basis.size(), "");
    if (g.cohomology_model.empty()) g.cohomology_model = g.name;
    out.push_back(std::make_shared<const ThreeFoldGeometry>(std::move(g)));
  };

  // H2(X) is represented by the class beta itself (B) and the blown-up curve C.
  add({.name = std::string(kAbstractX),
       .h2_basis = {"B", "C"},
       .c1 = std::vector<SymForm>{sym("c_beta"), sym(kC1Symbol)},
       .symbolic_param_bounds = {{std::string(kC1Symbol), 0}}});

  add({.name = std::string(kP3),
       .h2_basis = {"L"},
       .divisors = {{"H", {1}}},
       .c1 = std::vector<SymForm>{4}});

  // F = L - e is the fiber of P3_blown = P_H(O(1) + O); c1 = 4H - 2E.
  add({.name = std::string(kP3Blown),
       .h2_basis = {"F", "L"},
       .divisors = {{"H", {1, 1}}, {"E", {1, 0}}},
       .c1 = std::vector<SymForm>{2, 4},
       .blowup = BlowupData{.base = std::string(kP3),
                            .pbang = {{0, 1}},
                            .pushforward = {{1}, {1}},
                            .exceptional_line = {-1, 1}}});

  // c1(X~) = p*c1(X) - 2E for a point, - E for a curve.
  for (const bool curve : {false, true}) {
    add({.name = std::string(curve ? kXBlownCurve : kXBlownPoint),
         .h2_basis = {"Bt", "Ct", "e"},
         .divisors = {{"E", {0, 0, -1}}},
         .c1 = std::vector<SymForm>{sym("c_beta"), sym(kC1Symbol), curve ? 1 : 2},
         .symbolic_param_bounds = {{std::string(kC1Symbol), 0}},
         .blowup = BlowupData{.base = std::string(kAbstractX),
                              .pbang = {{1, 0, 0}, {0, 1, 0}},
                              .pushforward = {{1, 0}, {0, 1}, {0, 0}},
                              .exceptional_line = {0, 0, 1},
                              .center_curve = curve ? std::optional<std::vector<int>>({0, 1})
                                                    : std::nullopt}});
  }

  // P_C(N_C + O_C): F a fiber line, sigma the zero section (disjoint from
  // D_inf). c1 = pi^*c1(X)|_C - 3c1(xi) pairs to 3 on F and c on sigma.
  add({.name = std::string(kBundleOverC),
       .h2_basis = {"F", "sigma"},
       .divisors = {{"Dinf", {1, 0}}},
       .c1 = std::vector<SymForm>{3, sym(kC1Symbol)},
       .free_parameter_names = {"", std::string(kDegreeSymbol)},
       .symbolic_param_bounds = {{std::string(kC1Symbol), 0}}});

  // P_E(N_E + O_E): F a fiber line; f, s fiber and section of E -> C inside
  // the zero section, s normalized so that s.E = 0. On the zero section
  // c1 = (pi_E o pi)^*c1(X)|_C - c1(N_E), and f.E = -1.
  add({.name = std::string(kBundleOverE),
       .h2_basis = {"F", "f", "s"},
       .divisors = {{"Dinf", {1, 0, 0}}, {"E", {1, -1, 0}}},
       .c1 = std::vector<SymForm>{2, 1, sym(kC1Symbol)},
       .free_parameter_names = {"", "", std::string(kDegreeSymbol)},
       .symbolic_param_bounds = {{std::string(kC1Symbol), 0}}});
  return out;
}

}  // namespace

std::vector<GeometryPtr> catalogue_all() {
  static const std::vector<GeometryPtr> all = build_catalogue();
  return all;
}

GeometryPtr catalogue(std::string_view name) {
  for (const auto& g : catalogue_all()) {
    if (g->name == name) return g;
  }
  throw UnknownGeometry("no catalogued geometry named '" + std::string(name) + "'");
}

CurveClass make_class(GeometryPtr g, std::vector<SymForm> coords) {
  if (static_cast<int>(coords.size()) != g->rank()) {
    throw InvalidModel("class on " + g->name + " needs " + std::to_string(g->rank()) +
                       " coordinates");
  }
  return CurveClass{std::move(g), std::move(coords), {}};
}

CurveClass CurveClass::substitute(const std::string& symbol, const SymForm& value) const {
  CurveClass out = *this;
  for (auto& c : out.coords) c = c.substitute(symbol, value);
  std::erase(out.free_params, symbol);
  return out;
}

bool CurveClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const SymForm& c) { return c.is_zero(); });
}

namespace {

void require_same(const CurveClass& a, const CurveClass& b) {
  if (a.geometry->name != b.geometry->name) {
    throw InvalidModel("classes live on different geometries: " + a.geometry->name + ", " +
                       b.geometry->name);
  }
}

std::vector<std::string> merged(std::vector<std::string> a, const std::vector<std::string>& b) {
  for (const auto& s : b) {
    if (std::find(a.begin(), a.end(), s) == a.end()) a.push_back(s);
  }
  return a;
}

}  // namespace

CurveClass operator+(const CurveClass& a, const CurveClass& b) {
  require_same(a, b);
  CurveClass out{a.geometry, a.coords, merged(a.free_params, b.free_params)};
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = out.coords[i] + b.coords[i];
  return out;
}

CurveClass operator*(const SymForm& s, const CurveClass& a) {
  CurveClass out = a;
  for (auto& c : out.coords) c = s * c;
  return out;
}

CurveClass operator-(const CurveClass& a, const CurveClass& b) { return a + SymForm(-1LL) * b; }

bool operator==(const CurveClass& a, const CurveClass& b) {
  return a.geometry->name == b.geometry->name && a.coords == b.coords;
}

std::string to_string(const CurveClass& beta) {
  std::string out;
  for (std::size_t i = 0; i < beta.coords.size(); ++i) {
    const SymForm& c = beta.coords[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (c == SymForm(1LL)) {
      out += beta.geometry->h2_basis[i];
    } else if (c.is_constant()) {
      out += to_string(c) + "*" + beta.geometry->h2_basis[i];
    } else {
      out += "(" + to_string(c) + ")*" + beta.geometry->h2_basis[i];
    }
  }
  return out.empty() ? "0" : out;
}

SymForm intersect(const ThreeFoldGeometry& g, std::string_view divisor, const CurveClass& beta) {
  const auto& d = g.divisor(divisor);
  SymForm total;
  for (std::size_t i = 0; i < beta.coords.size(); ++i) {
    total = total + SymForm(static_cast<long long>(d.pairing[i])) * beta.coords[i];
  }
  return total;
}

SymForm c1_pair(const ThreeFoldGeometry& g, const CurveClass& beta) {
  if (!g.c1) throw UnknownGeometry(g.name + " carries no c1 data");
  if (beta.geometry->name != g.name) {
    throw InvalidModel("class on " + beta.geometry->name + " paired with c1 of " + g.name);
  }
  SymForm total;
  for (std::size_t i = 0; i < beta.coords.size(); ++i) total = total + beta.coords[i] * (*g.c1)[i];
  return total;
}

CurveClass solve_class_constraints(const GeometryPtr& g, const std::vector<ClassConstraint>& constraints) {
  const std::size_t rows = constraints.size();
  const std::size_t cols = g->h2_basis.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  std::vector<SymForm> rhs(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& d = g->divisor(constraints[r].divisor);
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = d.pairing[c];
    rhs[r] = constraints[r].value;
  }

  // Gauss-Jordan over Q with symbolic right-hand sides.
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    std::swap(rhs[p], rhs[rank]);
    const Rational inv = Rational(1) / a[rank][c];
    for (auto& v : a[rank]) v *= inv;
    rhs[rank] = SymForm(inv) * rhs[rank];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] -= f * a[rank][k];
      rhs[r] = rhs[r] - SymForm(f) * rhs[rank];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r) {
    if (!rhs[r].is_zero()) {
      throw InconsistentConstraints("class constraints on " + g->name + " have no solution");
    }
  }

  std::vector<SymForm> coords(cols);
  std::vector<std::string> free_params;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::string name = g->free_parameter_names.size() > c ? g->free_parameter_names[c] : "";
    if (name.empty()) name = "t" + std::to_string(c);
    coords[c] = SymForm::symbol(name);
    free_params.push_back(name);
  }
  for (std::size_t r = 0; r < rank; ++r) {
    SymForm value = rhs[r];
    for (std::size_t c = 0; c < cols; ++c) {
      if (!is_pivot[c] && a[r][c] != 0) value = value - SymForm(a[r][c]) * coords[c];
    }
    coords[pivot_col[r]] = value;
  }
  for (const auto& c : coords) {
    for (const auto& [m, coef] : c.terms()) {
      if (!is_integer(coef)) {
        throw InconsistentConstraints("class constraints on " + g->name +
                                      " admit no integral family");
      }
    }
  }
  return CurveClass{g, std::move(coords), std::move(free_params)};
}

namespace {

const BlowupData& blowup_of(const ThreeFoldGeometry& blown, std::string_view base) {
  if (!blown.blowup || blown.blowup->base != base) {
    throw InvalidModel(blown.name + " is not a blow-up of " + std::string(base));
  }
  return *blown.blowup;
}

CurveClass apply(const std::vector<std::vector<int>>& rows, const CurveClass& beta, GeometryPtr target) {
  std::vector<SymForm> coords(target->rank());
  for (std::size_t i = 0; i < beta.coords.size(); ++i) {
    for (std::size_t j = 0; j < coords.size(); ++j) {
      coords[j] = coords[j] + SymForm(static_cast<long long>(rows[i][j])) * beta.coords[i];
    }
  }
  return CurveClass{std::move(target), std::move(coords), beta.free_params};
}

}  // namespace

CurveClass pbang(const ThreeFoldGeometry& base, const GeometryPtr& blown, const CurveClass& beta) {
  const auto& data = blowup_of(*blown, base.name);
  if (beta.geometry->name != base.name) throw InvalidModel("pbang: class not on " + base.name);
  return apply(data.pbang, beta, blown);
}

CurveClass pushforward(const GeometryPtr& base, const ThreeFoldGeometry& blown, const CurveClass& beta) {
  const auto& data = blowup_of(blown, base->name);
  if (beta.geometry->name != blown.name) throw InvalidModel("pushforward: class not on " + blown.name);
  return apply(data.pushforward, beta, base);
}

CurveClass exceptional_line(const GeometryPtr& blown) {
  if (!blown->blowup) throw InvalidModel(blown->name + " is not a blow-up");
  std::vector<SymForm> coords;
  for (int v : blown->blowup->exceptional_line) coords.emplace_back(static_cast<long long>(v));
  return make_class(blown, std::move(coords));
}

std::string to_string(CenterKind c) {
  switch (c) {
    case CenterKind::Point: return "point";
    case CenterKind::Curve: return "curve";
    case CenterKind::DivisorE: return "divisor_E";
  }
  return "?";
}

Degeneration build_degeneration(const GeometryPtr& g, CenterKind center) {
  const auto point_surface = builtin_model("P2");
  const auto curve_surface = builtin_model("ruled");
  auto make = [&](std::string_view small, std::string_view small_div, std::string_view large,
                  CohModelPtr surface) {
    return Degeneration{g, center, catalogue(small), std::string(small_div), catalogue(large), "E",
                        std::move(surface)};
  };
  const std::string& name = g->name;
  if (center == CenterKind::Point) {
    if (name == kAbstractX) return make(kP3, "H", kXBlownPoint, point_surface);
    if (name == kP3) return make(kP3, "H", kP3Blown, point_surface);
  } else if (center == CenterKind::Curve) {
    if (name == kAbstractX) return make(kBundleOverC, "Dinf", kXBlownCurve, curve_surface);
  } else {
    if (name == kXBlownPoint) return make(kP3Blown, "H", kXBlownPoint, point_surface);
    if (name == kP3Blown) return make(kP3Blown, "H", kP3Blown, point_surface);
    if (name == kXBlownCurve) return make(kBundleOverE, "Dinf", kXBlownCurve, curve_surface);
  }
  throw UnsupportedCenter("cannot degenerate " + name + " at a " + to_string(center));
}

std::vector<ClassConstraint> small_side_constraints(const Degeneration& deg, const CurveClass& total) {
  std::vector<ClassConstraint> out{{deg.small_divisor, SymForm::symbol(std::string(kSizeSymbol))}};
  if (deg.center == CenterKind::DivisorE) {
    // The exceptional divisor of the absolute X~ moves into the bubble.
    out.push_back({"E", intersect(*deg.absolute, "E", total)});
  }
  return out;
}

CurveClass large_side_class(const Degeneration& deg, const CurveClass& total, const SymForm& size,
                            const SymForm& degree) {
  const auto& data = *deg.large->blowup;
  const GeometryPtr base = catalogue(data.base);
  CurveClass beta = deg.center == CenterKind::DivisorE ? pushforward(base, *deg.absolute, total) : total;
  if (!degree.is_zero()) {
    if (!data.center_curve) throw InvalidModel("nonzero C-degree on a point blow-up");
    std::vector<SymForm> c;
    for (int v : *data.center_curve) c.emplace_back(static_cast<long long>(v));
    beta = beta - degree * make_class(base, std::move(c));
  }
  return pbang(*base, deg.large, beta) - size * exceptional_line(deg.large);
}

nlohmann::json to_json(const ThreeFoldGeometry& g) {
  nlohmann::json divisors = nlohmann::json::object();
  for (const auto& d : g.divisors) divisors[d.name] = d.pairing;
  nlohmann::json out{{"name", g.name},
                     {"h2_basis", g.h2_basis},
                     {"divisor_matrix", divisors},
                     {"symbolic_params", nlohmann::json::object()},
                     {"cohomology_model", g.cohomology_model}};
  if (g.c1) {
    nlohmann::json c1 = nlohmann::json::array();
    for (const auto& v : *g.c1) c1.push_back(to_string(v));
    out["c1_vector"] = c1;
  } else {
    out["c1_vector"] = nullptr;
  }
  for (const auto& [s, lo] : g.symbolic_param_bounds) out["symbolic_params"][s] = {{"lower_bound", lo}};
  if (std::any_of(g.free_parameter_names.begin(), g.free_parameter_names.end(),
                  [](const std::string& s) { return !s.empty(); })) {
    out["free_parameter_names"] = g.free_parameter_names;
  }
  if (g.blowup) {
    const auto& b = *g.blowup;
    out["blowup"] = {{"base", b.base},
                     {"pbang", b.pbang},
                     {"pushforward", b.pushforward},
                     {"exceptional_line", b.exceptional_line},
                     {"exceptional_divisor", b.exceptional_divisor}};
    if (b.center_curve) out["blowup"]["center_curve"] = *b.center_curve;
  }
  return out;
}

GeometryPtr geometry_from_json(const nlohmann::json& j) {
  try {
    ThreeFoldGeometry g;
    g.name = j.at("name").get<std::string>();
    g.h2_basis = j.at("h2_basis").get<std::vector<std::string>>();
    for (const auto& [name, row] : j.at("divisor_matrix").items()) {
      DivisorFunctional d{name, row.get<std::vector<int>>()};
      if (d.pairing.size() != g.h2_basis.size()) {
        throw InvalidModel("divisor " + name + " is not defined on every generator");
      }
      g.divisors.push_back(std::move(d));
    }
    if (j.contains("c1_vector") && !j.at("c1_vector").is_null()) {
      std::vector<SymForm> c1;
      for (const auto& v : j.at("c1_vector")) {
        c1.push_back(v.is_number_integer() ? SymForm(v.get<long long>())
                                           : parse_symform(v.get<std::string>()));
      }
      if (c1.size() != g.h2_basis.size()) throw InvalidModel("c1_vector length differs from rank");
      g.c1 = std::move(c1);
    }
    if (j.contains("symbolic_params")) {
      for (const auto& [s, v] : j.at("symbolic_params").items()) {
        g.symbolic_param_bounds[s] = v.value("lower_bound", 0);
      }
    }
    g.free_parameter_names = j.value("free_parameter_names", std::vector<std::string>(g.h2_basis.size()));
    g.cohomology_model = j.value("cohomology_model", g.name);
    if (j.contains("blowup")) {
      const auto& b = j.at("blowup");
      BlowupData data{.base = b.at("base").get<std::string>(),
                      .pbang = b.at("pbang").get<std::vector<std::vector<int>>>(),
                      .pushforward = b.at("pushforward").get<std::vector<std::vector<int>>>(),
                      .exceptional_line = b.at("exceptional_line").get<std::vector<int>>(),
                      .exceptional_divisor = b.value("exceptional_divisor", std::string("E"))};
      if (b.contains("center_curve")) data.center_curve = b.at("center_curve").get<std::vector<int>>();
      g.blowup = std::move(data);
    }
    return std::make_shared<const ThreeFoldGeometry>(std::move(g));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("geometry JSON: ") + e.what());
  }
}

}  // namespace pairblow
