#include <doctest.h>

#include "folia/projective_charts.hpp"
#include "support/gen.hpp"

using namespace folia;

namespace {

BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }

PolyVectorField random_field(gen::Source& src, int d) {
  PolyVectorField f;
  do {
    f = {src.poly(d, 5), src.poly(d, 5)};
  } while (f.is_zero() || f.degree() != d);
  return f;
}

/// Hand chain rule for the U chart: u' = -u^2 x', v' = u (y' - v x') with x = 1/u, y = v/u.
RatField chain_rule_u(const PolyVectorField& x) {
  RatFunc u(X()), v(Y());
  RatFunc xs = RatFunc(BiPoly(1), X());
  RatFunc ys = RatFunc(Y(), X());
  RatFunc P = RatFunc(x.p).compose(xs, ys);
  RatFunc Q = RatFunc(x.q).compose(xs, ys);
  return {-(u * u * P), u * (Q - v * P)};
}

}  // namespace

TEST_CASE("saturation splits off the common factor") {
  auto s = saturate({X() * Y(), X() * X()});
  CHECK(s.scalar == X());
  CHECK(s.core == PolyVectorField{Y(), X()});
  auto t = saturate({X() * X() * Y(), -(X() * Y() * Y())});
  CHECK(t.scalar == X() * Y());
  CHECK(t.core == PolyVectorField{X(), -Y()});
  CHECK(saturate(t.core).scalar == BiPoly(1));
  CHECK(t.scalar_degree + t.core_degree == 3);
}

TEST_CASE("homogeneous parts partition the polynomial") {
  auto parts = homogeneous_parts(X() * X() + X() * Y() + Y());
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == std::make_pair(1, Y()));
  CHECK(parts[1] == std::make_pair(2, X() * X() + X() * Y()));
  CHECK(homogeneous_parts(BiPoly()).empty());
  gen::Source src(21);
  for (int k = 0; k < 50; ++k) {
    BiPoly p = src.poly(5, 8, true);
    BiPoly sum;
    for (auto& [d, part] : homogeneous_parts(p)) {
      CHECK(part.degree() == d);
      CHECK(part.order() == d);
      sum += part;
    }
    CHECK(sum == p);
  }
}

TEST_CASE("infinity invariance and foliation order") {
  CHECK(!infinity_invariant({X() * X(), X() * Y()}));
  CHECK(infinity_invariant({X(), -Y()}));
  CHECK(infinity_invariant({X() * X() * Y(), -(X() * Y() * Y())}));
  CHECK(foliation_order_at({X(), -Y()}, Gauss(0), Gauss(0)) == 1);
  CHECK(foliation_order_at({Y(), X() * X()}, Gauss(0), Gauss(0)) == 1);
  CHECK(foliation_order_at({X() * X() * Y(), -(X() * Y() * Y())}, Gauss(0), Gauss(0)) == 1);
}

TEST_CASE("chart formulas on the documented examples") {
  MeroField a = to_chart({X() * X(), BiPoly()}, ChartId::U_CHART);
  CHECK(a == MeroField(ChartId::U_CHART, BiPoly(1), X(), {-X(), -Y()}));
  CHECK(pole_order_at_infinity(a) == 1);
  MeroField b = to_chart({X() * X() * Y(), -(X() * Y() * Y())}, ChartId::U_CHART);
  CHECK(b == MeroField(ChartId::U_CHART, BiPoly(1), X() * X(), {-(X() * Y()), -(Y() * Y()).scaled(Gauss(2))}));
  CHECK(pole_order_at_infinity(b) == 2);
  MeroField c = to_chart({X(), Y()}, ChartId::U_CHART);
  CHECK(c == MeroField(ChartId::U_CHART, {-X(), BiPoly()}));
}

TEST_CASE("chart formulas agree with the chain rule and the pole law") {
  gen::Source src(23);
  for (int k = 0; k < 100; ++k) {
    int d = static_cast<int>(src.small(2, 5));
    PolyVectorField f = random_field(src, d);
    MeroField u = to_chart(f, ChartId::U_CHART);
    CHECK(u == MeroField::from_rational(ChartId::U_CHART, chain_rule_u(f)));
    int expect = infinity_invariant(f) ? d - 1 : d - 2;
    CHECK(pole_order_at_infinity(u) == expect);
    CHECK(pole_order_at_infinity(to_chart(f, ChartId::S_CHART)) == expect);
    // the core leaves {u = 0} invariant exactly when the affine test says so
    PolyVectorField core = saturate(f).core;
    if (core.degree() == d) {
      bool inv = try_divide(to_chart(core, ChartId::U_CHART).core().p, X()).has_value();
      CHECK(inv == infinity_invariant(f));
    }
  }
}

TEST_CASE("transport round trips and cross-chart agreement") {
  gen::Source src(29);
  for (int k = 0; k < 40; ++k) {
    PolyVectorField f = random_field(src, static_cast<int>(src.small(1, 4)));
    MeroField u = to_chart(f, ChartId::U_CHART);
    MeroField s = to_chart(f, ChartId::S_CHART);
    CHECK(transport(u, ChartId::AFFINE) == MeroField(ChartId::AFFINE, f));
    CHECK(cross_chart_check(u, s));
    CHECK(cross_chart_check(s, u));
    CHECK(!cross_chart_check(u, MeroField(ChartId::S_CHART, s.num().scaled(Gauss(2)), s.den(), s.core()).scaled(Gauss(2))));
  }
  CHECK_THROWS_AS(cross_chart_check(MeroField(ChartId::LOCAL, {X(), Y()}), to_chart({X(), Y()}, ChartId::U_CHART)),
                  AnalysisError);
}

TEST_CASE("eigen data and classification") {
  auto e1 = eigen_data(MeroField(ChartId::LOCAL, {X() + Y(), Y()}));
  CHECK(e1.trace == Gauss(2));
  CHECK(e1.det == Gauss(1));
  CHECK(e1.jordan_nontrivial);
  auto e2 = eigen_data(MeroField(ChartId::LOCAL, {X(), Y().scaled(Gauss(-2))}));
  CHECK(e2.ratio_class == RatioClass::RATIONAL_RATIO);
  CHECK(e2.p == -2);
  CHECK(e2.q == 1);
  CHECK(eigen_data(MeroField(ChartId::LOCAL, {X(), Y() * Y()})).ratio_class == RatioClass::SADDLE_NODE);
  CHECK_THROWS_AS(eigen_data(MeroField(ChartId::LOCAL, {BiPoly(1), X()})), AnalysisError);

  auto type = [](PolyVectorField z) { return classify_singularity(MeroField(ChartId::LOCAL, z)).type; };
  CHECK(type({X() + Y(), Y()}) == SingularityType::LJ);
  CHECK(type({X(), Y()}) == SingularityType::DICRITICAL_LINEARIZABLE);
  CHECK(type({X(), Y().scaled(Gauss(2))}) == SingularityType::DICRITICAL_LINEARIZABLE);
  CHECK(type({X(), Y().scaled(Gauss(2)) + X() * X()}) == SingularityType::SIMPLE_HYPERBOLIC);
  CHECK(type({X() + Y() * Y(), Y().scaled(Gauss(2))}) == SingularityType::DICRITICAL_LINEARIZABLE);
  CHECK(type({X().scaled(Gauss(2)), Y().scaled(Gauss(3))}) == SingularityType::DICRITICAL_LINEARIZABLE);
  CHECK(type({X(), -Y()}) == SingularityType::SIMPLE_HYPERBOLIC);
  CHECK(type({Y(), X() * X()}) == SingularityType::NILPOTENT);
  CHECK(type({X() * X(), Y() * Y()}) == SingularityType::ZERO_LINEAR_PART);
  // x^2 d/dy resonance hidden behind a linear change of coordinates
  PolyVectorField hidden{X() + Y(), Y().scaled(Gauss(3)) + X().scaled(Gauss(0)) + (X() + Y()) * (X() + Y())};
  CHECK(type(hidden) == type({X(), Y().scaled(Gauss(2)) + X() * X()}));
  // a linear node stays linearizable after a triangular polynomial conjugation
  for (int n = 2; n <= 9; ++n) {
    RatField lin{RatFunc(X()), RatFunc(Y().scaled(Gauss(n)))};
    RatField conj = pullback(lin, RatFunc(X() + Y() * Y()), RatFunc(Y() + X() * X() - pow(X(), 3U)));
    MeroField g = MeroField::from_rational(ChartId::LOCAL, conj);
    CHECK(type(g.core()) == SingularityType::DICRITICAL_LINEARIZABLE);
    CHECK(type({X(), Y().scaled(Gauss(n)) + pow(X(), static_cast<unsigned>(n))}) == SingularityType::SIMPLE_HYPERBOLIC);
    CHECK(type({X(), Y().scaled(Gauss(n)) + pow(X(), static_cast<unsigned>(n + 1))}) ==
          SingularityType::DICRITICAL_LINEARIZABLE);
  }
}

TEST_CASE("index, multiplicity, asymptotic order and Milnor number") {
  Gauss lam(Rat(3, 7));
  MeroField lin(ChartId::LOCAL, {X(), Y().scaled(lam)});
  CHECK(index_along(lin, CurveWitness::y_axis_zero()) == lam);
  CHECK(index_along(lin, CurveWitness::x_axis_zero()) == lam.inverse());
  CHECK(multiplicity_along(MeroField(ChartId::LOCAL, {X(), Y()}), CurveWitness::y_axis_zero()) == 1);
  MeroField sn(ChartId::LOCAL, {X() * (BiPoly(1) + Y()), Y() * Y()});
  CHECK(index_along(sn, CurveWitness::y_axis_zero()) == Gauss(0));
  CHECK(multiplicity_along(sn, CurveWitness::y_axis_zero()) == 1);
  CHECK_THROWS_AS(index_along(MeroField(ChartId::LOCAL, {Y(), X()}), CurveWitness::y_axis_zero()), AnalysisError);
  CHECK(*milnor_number(MeroField(ChartId::LOCAL, {X(), -Y()})) == 1);
  CHECK(*milnor_number(MeroField(ChartId::LOCAL, {X(), pow(Y(), 3U)})) == 3);
  CHECK(*milnor_number(MeroField(ChartId::LOCAL, {Y(), X() * X()})) == 2);
  // a pole along {y = 0} shifts the asymptotic order by d * index
  MeroField pole(ChartId::LOCAL, BiPoly(1), Y(), {X() * X(), Y()});
  auto v = invariants_along(pole, CurveWitness::y_axis_zero());
  CHECK(v.multiplicity == 2);
  CHECK(v.asymptotic_order == Gauss(2) - v.index);
  // index is unchanged by a linear change preserving the separatrix
  gen::Source src(31);
  for (int k = 0; k < 30; ++k) {
    PolyVectorField z{X() + src.poly(3, 3) * Y(), Y().scaled(Gauss(src.rat() + 1)) * (BiPoly(1) + src.poly(2, 2))};
    z.q = z.q.truncated(4);
    if (z.q.is_zero()) continue;
    MeroField g(ChartId::LOCAL, z);
    Gauss base = index_along(g, CurveWitness::y_axis_zero());
    Gauss c = src.nonzero_gauss(false);
    // (x, y) -> (x + c y, y) keeps {y = 0}
    RatField moved = pullback(g.as_rational(), RatFunc(X() + Y().scaled(c)), RatFunc(Y()));
    CHECK(index_along(MeroField::from_rational(ChartId::LOCAL, moved), CurveWitness::y_axis_zero()) == base);
  }
}

TEST_CASE("singularities at infinity") {
  auto scan = singularities_at_infinity({X() * X() * Y(), -(X() * Y() * Y())});
  CHECK(scan.complete);
  REQUIRE(scan.points.size() == 2);
  for (auto& p : scan.points) CHECK(p.hint == DicriticalHint::YES);
  CHECK(singularities_at_infinity({Y(), BiPoly()}).points.size() == 1);
  // y P - x Q = y^3 - x^3 has the non-Gaussian cube roots of unity as directions
  auto irr = singularities_at_infinity({Y() * Y(), X() * X()});
  CHECK(!irr.complete);
  CHECK(irr.unresolved == "v^2 + v + 1");
  CHECK(irr.points.size() == 1);
}
