#include "folia/blowup.hpp"

namespace folia {

std::string to_string(BlowupChart c) { return c == BlowupChart::XT ? "xt" : "sy"; }

namespace {

BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }

/// Total transform in the chart (x, t) -> (x, tx): x' = P, t' = (Q - tP)/x.
MeroField chart_xt(const MeroField& germ, int m) {
  BiPoly ex = X(), ey = Y() * X();
  BiPoly P = germ.core().p.compose(ex, ey).shifted(-m, 0);
  BiPoly Q = germ.core().q.compose(ex, ey).shifted(-m, 0);
  BiPoly f = germ.num().compose(ex, ey) * pow(X(), static_cast<unsigned>(m));
  return MeroField(ChartId::LOCAL, f, germ.den().compose(ex, ey) * X(), {X() * P, Q - Y() * P});
}

/// Total transform in the chart (s, y) -> (sy, y): s' = (P - sQ)/y, y' = Q.
MeroField chart_sy(const MeroField& germ, int m) {
  BiPoly ex = X() * Y(), ey = Y();
  BiPoly P = germ.core().p.compose(ex, ey).shifted(0, -m);
  BiPoly Q = germ.core().q.compose(ex, ey).shifted(0, -m);
  BiPoly f = germ.num().compose(ex, ey) * pow(Y(), static_cast<unsigned>(m));
  return MeroField(ChartId::LOCAL, f, germ.den().compose(ex, ey) * Y(), {P - X() * Q, Y() * Q});
}

}  // namespace

int predicted_exceptional_order(const MeroField& germ) {
  return germ.num().order() + germ.foliation_order() - germ.den().order() - 1;
}

BlowupResult blow_up(const MeroField& germ, bool allow_regular, int trunc) {
  BlowupResult out;
  out.center_order = germ.foliation_order();
  if (out.center_order == 0 && !allow_regular) throw AnalysisError("blow-up center is a regular point");
  int m = out.center_order;
  out.chart_xt = chart_xt(germ, m);
  out.chart_sy = chart_sy(germ, m);
  PolyVectorField cone = germ.core().homogeneous_part(m);
  out.dicritical = (Y() * cone.p - X() * cone.q).is_zero();
  out.exceptional_order = out.chart_xt.divisor_order(X());
  if (out.exceptional_order != out.chart_sy.divisor_order(Y())) {
    throw std::logic_error("exceptional order differs between the blow-up charts");
  }

  const PolyVectorField& z = out.chart_xt.core();
  UniPoly h = gcd(z.p.at_x(Gauss(0)), z.q.at_x(Gauss(0)));
  if (h.degree() > 0) {
    auto roots = rational_roots(h);
    if (roots.residual.degree() > 0) {
      out.complete = false;
      out.unresolved = to_string(roots.residual, "t");
    }
    for (const auto& [t0, mult] : roots.roots) {
      DivisorSingularity d;
      d.chart = BlowupChart::XT;
      d.location = {Gauss(0), t0};
      d.germ = out.chart_xt.translate(Gauss(0), t0);
      d.classification = classify_singularity(d.germ, trunc);
      out.divisor_singularities.push_back(std::move(d));
    }
  }
  const PolyVectorField& w = out.chart_sy.core();
  if (w.p.constant_term().is_zero() && w.q.constant_term().is_zero()) {
    DivisorSingularity d;
    d.chart = BlowupChart::SY;
    d.location = {Gauss(0), Gauss(0)};
    d.germ = out.chart_sy;
    d.classification = classify_singularity(d.germ, trunc);
    out.divisor_singularities.push_back(std::move(d));
  }
  return out;
}

bool blow_down_check(const BlowupResult& result, const MeroField& original) {
  // inverse maps away from the divisor: t = y/x and s = x/y
  RatField a = pullback(result.chart_xt.as_rational(), RatFunc(X()), RatFunc(Y(), X()));
  RatField b = pullback(result.chart_sy.as_rational(), RatFunc(X(), Y()), RatFunc(Y()));
  MeroField orig = original.with_chart(ChartId::LOCAL);
  return MeroField::from_rational(ChartId::LOCAL, a) == orig && MeroField::from_rational(ChartId::LOCAL, b) == orig;
}

}  // namespace folia
