#include <gtest/gtest.h>

#include "pairblow/errors.hpp"
#include "pairblow/geomcat.hpp"

using namespace pairblow;

namespace {

SymForm sym(const char* s) { return SymForm::symbol(s); }
const SymForm n = SymForm::symbol("n");
const SymForm k = SymForm::symbol("k");
const SymForm d = SymForm::symbol("d");
const SymForm c = SymForm::symbol("c");

CurveClass cls(std::string_view g, std::vector<SymForm> coords) { return make_class(catalogue(g), std::move(coords)); }

}  // namespace

TEST(Catalogue, NamesAndLookup) {
  EXPECT_EQ(catalogue_all().size(), 7u);
  for (const auto& g : catalogue_all()) {
    EXPECT_EQ(catalogue(g->name), g);
    for (const auto& div : g->divisors) EXPECT_EQ(div.pairing.size(), g->h2_basis.size());
    ASSERT_TRUE(g->c1);
    EXPECT_EQ(g->c1->size(), g->h2_basis.size());
  }
  EXPECT_THROW(catalogue("quintic"), UnknownGeometry);
}

TEST(C1Pair, Examples) {
  EXPECT_EQ(c1_pair(*catalogue(kP3), cls(kP3, {1})), SymForm(4));
  const auto p3b = catalogue(kP3Blown);
  const auto b1 = solve_class_constraints(p3b, {{"H", n}, {"E", -k}});
  EXPECT_EQ(c1_pair(*p3b, b1), SymForm(4) * n + SymForm(2) * k);
  EXPECT_EQ(c1_pair(*p3b, cls(kP3Blown, {1, n - SymForm(1)})), SymForm(4) * n - SymForm(2));
  const auto be = catalogue(kBundleOverE);
  const auto b2 = solve_class_constraints(be, {{"Dinf", n}, {"E", 1}});
  EXPECT_EQ(c1_pair(*be, b2), d * c + SymForm(3) * n - SymForm(1));
  const auto bc = catalogue(kBundleOverC);
  EXPECT_EQ(c1_pair(*bc, solve_class_constraints(bc, {{"Dinf", n}})), d * c + SymForm(3) * n);
  EXPECT_EQ(c1_pair(*be, solve_class_constraints(be, {{"Dinf", n}, {"E", -k}})),
            d * c + SymForm(3) * n + k);
}

TEST(C1Pair, IsLinear) {
  for (const auto& g : catalogue_all()) {
    for (int i = 0; i < g->rank(); ++i) {
      for (int j = 0; j < g->rank(); ++j) {
        std::vector<SymForm> ei(g->rank(), 0), ej(g->rank(), 0);
        ei[i] = 1;
        ej[j] = 1;
        const auto a = make_class(g, ei), b = make_class(g, ej);
        EXPECT_EQ(c1_pair(*g, SymForm(3) * a + SymForm(-2) * b),
                  SymForm(3) * c1_pair(*g, a) + SymForm(-2) * c1_pair(*g, b));
      }
    }
  }
}

TEST(C1Pair, ClassOnWrongGeometry) {
  EXPECT_THROW(c1_pair(*catalogue(kP3), cls(kP3Blown, {1, 0})), InvalidModel);
}

TEST(SolveConstraints, Examples) {
  EXPECT_EQ(solve_class_constraints(catalogue(kP3), {{"H", n}}), cls(kP3, {n}));
  EXPECT_EQ(solve_class_constraints(catalogue(kP3Blown), {{"H", n}, {"E", 1}}), cls(kP3Blown, {1, n - SymForm(1)}));
  const auto be = catalogue(kBundleOverE);
  const auto fam = solve_class_constraints(be, {{"Dinf", n}, {"E", 0}});
  EXPECT_EQ(fam.free_params, std::vector<std::string>{"d"});
  // pi_* beta1 = (f-coefficient) f + d s pushes to E-degree -|eta| on the base.
  EXPECT_EQ(fam.coords[1], n);
  EXPECT_EQ(fam.coords[2], d);
  EXPECT_EQ(intersect(*be, "E", fam), SymForm(0));
}

TEST(SolveConstraints, Inconsistent) {
  EXPECT_THROW(solve_class_constraints(catalogue(kP3), {{"H", 1}, {"H", 2}}), InconsistentConstraints);
  EXPECT_THROW(solve_class_constraints(catalogue(kP3), {{"E", 1}}), InvalidModel);
}

TEST(SolveConstraints, FreeParametersGetGenericNames) {
  const auto fam = solve_class_constraints(catalogue(kP3Blown), {{"E", 2}});
  EXPECT_EQ(fam.free_params, std::vector<std::string>{"t1"});
  EXPECT_EQ(fam.coords[0], SymForm(2));
}

TEST(Pbang, Examples) {
  const auto p3 = catalogue(kP3);
  const auto p3b = catalogue(kP3Blown);
  const auto img = pbang(*p3, p3b, cls(kP3, {1}));
  EXPECT_EQ(intersect(*p3b, "E", img), SymForm(0));
  EXPECT_TRUE(pbang(*p3, p3b, cls(kP3, {0})).is_zero());
  const auto xp = catalogue(kXBlownPoint);
  const auto minus_e = pbang(*catalogue(kAbstractX), xp, cls(kAbstractX, {1, 0})) - exceptional_line(xp);
  EXPECT_EQ(intersect(*xp, "E", minus_e), SymForm(1));
  EXPECT_EQ(intersect(*xp, "E", exceptional_line(xp)), SymForm(-1));
  EXPECT_THROW(pbang(*p3, xp, cls(kP3, {1})), InvalidModel);
}

TEST(Pbang, InjectiveOntoKernelOfE) {
  for (const auto& blown : catalogue_all()) {
    if (!blown->blowup) continue;
    const auto base = catalogue(blown->blowup->base);
    // Image of every small base class: kernel of E, pushforward recovers it,
    // distinct inputs give distinct outputs.
    std::vector<std::vector<long long>> seen;
    const int r = base->rank();
    std::vector<int> v(r, -5);
    while (true) {
      std::vector<SymForm> coords(v.begin(), v.end());
      const auto beta = make_class(base, coords);
      const auto img = pbang(*base, blown, beta);
      EXPECT_EQ(intersect(*blown, "E", img), SymForm(0));
      EXPECT_EQ(pushforward(base, *blown, img), beta);
      int i = 0;
      while (i < r && ++v[i] > 5) v[i++] = -5;
      if (i == r) break;
    }
    // Every class in [-5,5]^rank with E-degree 0 is in the image.
    const int R = blown->rank();
    std::vector<int> w(R, -5);
    while (true) {
      std::vector<SymForm> coords(w.begin(), w.end());
      const auto gamma = make_class(blown, coords);
      if (intersect(*blown, "E", gamma).is_zero()) {
        EXPECT_EQ(pbang(*base, blown, pushforward(base, *blown, gamma)), gamma) << to_string(gamma);
      }
      int i = 0;
      while (i < R && ++w[i] > 5) w[i++] = -5;
      if (i == R) break;
    }
  }
}

TEST(Degeneration, Table) {
  auto check = [](std::string_view g, CenterKind center, std::string_view small, std::string_view sdiv,
                  std::string_view large, std::string_view surface) {
    const auto deg = build_degeneration(catalogue(g), center);
    EXPECT_EQ(deg.small->name, small);
    EXPECT_EQ(deg.small_divisor, sdiv);
    EXPECT_EQ(deg.large->name, large);
    EXPECT_EQ(deg.large_divisor, "E");
    EXPECT_EQ(deg.surface->name(), surface);
  };
  check(kAbstractX, CenterKind::Point, kP3, "H", kXBlownPoint, "P2");
  check(kXBlownPoint, CenterKind::DivisorE, kP3Blown, "H", kXBlownPoint, "P2");
  check(kAbstractX, CenterKind::Curve, kBundleOverC, "Dinf", kXBlownCurve, "ruled");
  check(kXBlownCurve, CenterKind::DivisorE, kBundleOverE, "Dinf", kXBlownCurve, "ruled");
  check(kP3, CenterKind::Point, kP3, "H", kP3Blown, "P2");
  EXPECT_THROW(build_degeneration(catalogue(kP3), CenterKind::Curve), UnsupportedCenter);
  EXPECT_THROW(build_degeneration(catalogue(kAbstractX), CenterKind::DivisorE), UnsupportedCenter);
}

TEST(Degeneration, TwoRoutesAgreeForPointBlowup) {
  // Degenerating X~ along E with beta.E = 0 must give the class family that
  // p^! produces from the point degeneration of X.
  const auto x = catalogue(kAbstractX);
  const auto xp = catalogue(kXBlownPoint);
  const auto direct = build_degeneration(x, CenterKind::Point);
  const auto along_e = build_degeneration(xp, CenterKind::DivisorE);
  const auto B = make_class(x, {1, 0});
  const auto Bt = pbang(*x, xp, B);
  EXPECT_EQ(large_side_class(direct, B, n, 0), large_side_class(along_e, Bt, n, 0));
  const auto small_direct = solve_class_constraints(direct.small, small_side_constraints(direct, B));
  const auto small_e = solve_class_constraints(along_e.small, small_side_constraints(along_e, Bt));
  EXPECT_EQ(small_direct, cls(kP3, {n}));
  EXPECT_EQ(small_e, cls(kP3Blown, {0, n}));
  EXPECT_EQ(pbang(*catalogue(kP3), catalogue(kP3Blown), small_direct), small_e);
}

TEST(Degeneration, LargeSideCarriesDegree) {
  const auto deg = build_degeneration(catalogue(kAbstractX), CenterKind::Curve);
  EXPECT_EQ(large_side_class(deg, cls(kAbstractX, {1, 0}), 2, 1), cls(kXBlownCurve, {1, -1, -2}));
  const auto pdeg = build_degeneration(catalogue(kAbstractX), CenterKind::Point);
  EXPECT_THROW(large_side_class(pdeg, cls(kAbstractX, {1, 0}), 1, 1), InvalidModel);
}

TEST(Geometry, JsonRoundTrip) {
  for (const auto& g : catalogue_all()) {
    const auto back = geometry_from_json(to_json(*g));
    EXPECT_EQ(to_json(*back), to_json(*g)) << g->name;
    EXPECT_EQ(back->c1, g->c1);
  }
  EXPECT_THROW(geometry_from_json(nlohmann::json::parse(R"({"name":"x"})")), ParseError);
  EXPECT_THROW(geometry_from_json(nlohmann::json::parse(
                   R"({"name":"x","h2_basis":["a"],"divisor_matrix":{"H":[1,2]}})")),
               InvalidModel);
}

TEST(CurveClassText, Rendering) {
  EXPECT_EQ(to_string(cls(kXBlownPoint, {1, 0, -1})), "Bt + -1*e");
  EXPECT_EQ(to_string(cls(kP3Blown, {1, n - SymForm(1)})), "F + (-1 + 1*n)*L");
  EXPECT_EQ(to_string(cls(kP3, {0})), "0");
  EXPECT_THROW(cls(kP3, {1, 2}), InvalidModel);
}
