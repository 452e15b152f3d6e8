#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pairblow/cohpart.hpp"
#include "pairblow/symform.hpp"

namespace pairblow {

// Catalogue names.
inline constexpr std::string_view kAbstractX = "abstract_X";
inline constexpr std::string_view kP3 = "P3";
inline constexpr std::string_view kP3Blown = "P3_blown";
inline constexpr std::string_view kXBlownPoint = "X_blown_point";
inline constexpr std::string_view kXBlownCurve = "X_blown_curve";
inline constexpr std::string_view kBundleOverC = "bundle_over_C";
inline constexpr std::string_view kBundleOverE = "bundle_over_E";

// Symbols shared by class families, c1 forms and gates.
inline constexpr std::string_view kSizeSymbol = "n";     // |eta|
inline constexpr std::string_view kShiftSymbol = "k";    // multiple of e
inline constexpr std::string_view kDegreeSymbol = "d";   // C-degree of a pushforward
inline constexpr std::string_view kC1Symbol = "c";       // integral of c1(X) over C

struct DivisorFunctional {
  std::string name;
  std::vector<int> pairing;  // value on each H2 generator
};

/// How a blow-up's lattice relates to its base.
struct BlowupData {
  std::string base;
  std::vector<std::vector<int>> pbang;        // row i: image of base generator i
  std::vector<std::vector<int>> pushforward;  // row i: image of generator i in the base
  std::vector<int> exceptional_line;          // the fiber-line class e
  std::string exceptional_divisor = "E";
  std::optional<std::vector<int>> center_curve;  // [C] in the base, curve blow-ups only
};

/// Finite lattice model of a 3-fold: H2 basis, divisor functionals, and the
/// c1 functional (possibly symbolic in c).
struct ThreeFoldGeometry {
  std::string name;
  std::vector<std::string> h2_basis;
  std::vector<DivisorFunctional> divisors;
  std::optional<std::vector<SymForm>> c1;
  /// Name given to a generator's coefficient when it is left free by a
  /// constraint solve ("" means use a generic t<i>).
  std::vector<std::string> free_parameter_names;
  std::map<std::string, int> symbolic_param_bounds;  // symbol -> lower bound
  std::string cohomology_model;
  std::optional<BlowupData> blowup;

  int rank() const { return static_cast<int>(h2_basis.size()); }
  const DivisorFunctional& divisor(std::string_view name) const;
  bool has_divisor(std::string_view name) const;
};

using GeometryPtr = std::shared_ptr<const ThreeFoldGeometry>;

/// Throws UnknownGeometry for names outside the catalogue.
GeometryPtr catalogue(std::string_view name);
std::vector<GeometryPtr> catalogue_all();

/// A curve class, or a family of classes when coords mention symbols.
struct CurveClass {
  GeometryPtr geometry;
  std::vector<SymForm> coords;
  /// Parameters of a solved family; effectivity is the axiom that these are
  /// all >= 0.
  std::vector<std::string> free_params;

  CurveClass substitute(const std::string& symbol, const SymForm& value) const;
  bool is_zero() const;

  friend CurveClass operator+(const CurveClass& a, const CurveClass& b);
  friend CurveClass operator-(const CurveClass& a, const CurveClass& b);
  friend CurveClass operator*(const SymForm& s, const CurveClass& a);
  friend bool operator==(const CurveClass& a, const CurveClass& b);
};

/// Checks coords length against the geometry rank.
CurveClass make_class(GeometryPtr g, std::vector<SymForm> coords);

/// "L", "F + (-1 + 1*n)*L", "Bt + -1*e", "0".
std::string to_string(const CurveClass& beta);

SymForm intersect(const ThreeFoldGeometry& g, std::string_view divisor, const CurveClass& beta);

/// Integral of c1(g) over beta. Throws UnknownGeometry if g has no c1 data.
SymForm c1_pair(const ThreeFoldGeometry& g, const CurveClass& beta);

struct ClassConstraint {
  std::string divisor;
  SymForm value;
};

/// Solves beta.D = value for every constraint over the H2 basis. Throws
/// InconsistentConstraints when no integral family exists.
CurveClass solve_class_constraints(const GeometryPtr& g, const std::vector<ClassConstraint>& constraints);

/// p^! from `base` into its blow-up `blown`.
CurveClass pbang(const ThreeFoldGeometry& base, const GeometryPtr& blown, const CurveClass& beta);
CurveClass pushforward(const GeometryPtr& base, const ThreeFoldGeometry& blown, const CurveClass& beta);
CurveClass exceptional_line(const GeometryPtr& blown);

enum class CenterKind { Point, Curve, DivisorE };
std::string to_string(CenterKind c);

/// The two halves of a degeneration: small side (bubble) and large side,
/// each relative to the common divisor, whose cohomology is `surface`.
struct Degeneration {
  GeometryPtr absolute;
  CenterKind center;
  GeometryPtr small;
  std::string small_divisor;
  GeometryPtr large;
  std::string large_divisor;
  CohModelPtr surface;
};

/// Throws UnsupportedCenter for combinations outside the catalogue.
Degeneration build_degeneration(const GeometryPtr& g, CenterKind center);

/// Class constraints on the small side for total class `total` on the
/// absolute geometry: beta1.S = n, plus beta1.E = total.E when X~ is
/// degenerated along E.
std::vector<ClassConstraint> small_side_constraints(const Degeneration& deg, const CurveClass& total);

/// Large-side class p^!(beta - d*C) - n*e, with beta the pushforward of
/// `total` to the base.
CurveClass large_side_class(const Degeneration& deg, const CurveClass& total, const SymForm& size,
                            const SymForm& degree);

nlohmann::json to_json(const ThreeFoldGeometry& g);
GeometryPtr geometry_from_json(const nlohmann::json& j);

}  // namespace pairblow
