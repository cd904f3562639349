#include "folia/projective_charts.hpp"

#include <algorithm>

namespace folia {

namespace {

BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }

/// t^d p(1/t, w/t) for the U chart, or t^d p(w/t, 1/t) for the S chart,
/// with (t, w) mapped to the chart variables.
BiPoly homogenize(const BiPoly& p, int d, bool u_chart) {
  BiPoly out;
  for (const auto& [e, c] : p.terms()) {
    int t_pow = d - e.first - e.second;
    // U chart: variables (u, v) with x = 1/u, y = v/u
    // S chart: variables (r, s) with x = r/s, y = 1/s
    out += u_chart ? BiPoly::monomial(t_pow, e.second, c) : BiPoly::monomial(e.first, t_pow, c);
  }
  return out;
}

}  // namespace

MeroField to_chart(const PolyVectorField& x, ChartId target) {
  if (x.is_zero()) throw std::invalid_argument("zero field");
  int d = x.degree();
  BiPoly f = d <= 1 ? pow(target == ChartId::U_CHART ? X() : Y(), static_cast<unsigned>(1 - d)) : BiPoly(1);
  BiPoly g = d >= 1 ? pow(target == ChartId::U_CHART ? X() : Y(), static_cast<unsigned>(d - 1)) : BiPoly(1);
  switch (target) {
    case ChartId::U_CHART: {
      BiPoly P = homogenize(x.p, d, true);
      BiPoly Q = homogenize(x.q, d, true);
      return MeroField(target, f, g, {-(X() * P), Q - Y() * P});
    }
    case ChartId::S_CHART: {
      BiPoly P = homogenize(x.p, d, false);
      BiPoly Q = homogenize(x.q, d, false);
      return MeroField(target, f, g, {P - X() * Q, -(Y() * Q)});
    }
    case ChartId::AFFINE: return MeroField(target, x);
    case ChartId::LOCAL: break;
  }
  throw std::invalid_argument("to_chart needs a projective chart");
}

std::pair<RatFunc, RatFunc> affine_to_chart(ChartId c) {
  switch (c) {
    case ChartId::AFFINE: return {RatFunc(X()), RatFunc(Y())};
    case ChartId::U_CHART: return {RatFunc(BiPoly(1), X()), RatFunc(Y(), X())};
    case ChartId::S_CHART: return {RatFunc(X(), Y()), RatFunc(BiPoly(1), Y())};
    case ChartId::LOCAL: break;
  }
  throw AnalysisError("local chart has no projective transition");
}

std::pair<RatFunc, RatFunc> chart_to_affine(ChartId c) {
  // the three transitions are involutions in this form
  return affine_to_chart(c);
}

MeroField transport(const MeroField& m, ChartId target) {
  if (m.chart() == ChartId::LOCAL || target == ChartId::LOCAL) {
    throw AnalysisError("fields in local charts do not overlap the projective charts");
  }
  auto [ax, ay] = chart_to_affine(target);
  auto [cx, cy] = affine_to_chart(m.chart());
  RatFunc m1 = cx.compose(ax, ay);
  RatFunc m2 = cy.compose(ax, ay);
  return MeroField::from_rational(target, pullback(m.as_rational(), m1, m2));
}

bool cross_chart_check(const MeroField& a, const MeroField& b) {
  return transport(a, b.chart()) == b;
}

BiPoly infinity_line(ChartId c) {
  switch (c) {
    case ChartId::U_CHART: return X();
    case ChartId::S_CHART: return Y();
    default: break;
  }
  throw std::invalid_argument("chart does not meet the line at infinity");
}

int pole_order_at_infinity(const MeroField& m) { return -m.divisor_order(infinity_line(m.chart())); }

std::string to_string(DicriticalHint h) {
  switch (h) {
    case DicriticalHint::YES: return "yes";
    case DicriticalHint::NO: return "no";
    case DicriticalHint::NEEDS_RESOLUTION: return "needs-resolution";
  }
  return "?";
}

DicriticalHint dicritical_hint(const Classification& c) {
  if (c.type == SingularityType::DICRITICAL_LINEARIZABLE) return DicriticalHint::YES;
  if (!is_simple(c.type) || c.linearization_undecided) return DicriticalHint::NEEDS_RESOLUTION;
  return DicriticalHint::NO;
}

InfinityScan scan_chart(const PolyVectorField& x, ChartId c, int trunc) {
  MeroField m = to_chart(saturate(x).core, c);
  const PolyVectorField& z = m.core();
  bool u = c == ChartId::U_CHART;
  // restrict the core to the line at infinity, parametrized by the other coordinate
  UniPoly a = u ? z.p.at_x(Gauss(0)) : z.p.at_y(Gauss(0));
  UniPoly b = u ? z.q.at_x(Gauss(0)) : z.q.at_y(Gauss(0));
  UniPoly h = gcd(a, b);
  InfinityScan out;
  if (h.degree() <= 0) return out;
  auto roots = rational_roots(h);
  if (roots.residual.degree() > 0) {
    out.complete = false;
    out.unresolved = to_string(roots.residual, u ? "v" : "r");
  }
  for (const auto& [t, mult] : roots.roots) {
    InfinitySingularity s;
    s.chart = c;
    s.location = u ? std::make_pair(Gauss(0), t) : std::make_pair(t, Gauss(0));
    s.germ = m.translate(s.location.first, s.location.second).with_chart(c);
    s.classification = classify_singularity(s.germ, trunc);
    s.hint = dicritical_hint(s.classification);
    out.points.push_back(std::move(s));
  }
  return out;
}

InfinityScan singularities_at_infinity(const PolyVectorField& x, int trunc) {
  if (x.is_zero()) throw AnalysisError("zero field");
  InfinityScan out = scan_chart(x, ChartId::U_CHART, trunc);
  InfinityScan s = scan_chart(x, ChartId::S_CHART, trunc);
  for (auto& p : s.points) {
    if (p.location.first.is_zero()) out.points.push_back(std::move(p));
  }
  // the S chart only contributes [0:1:0]; its residual concerns points already in U
  return out;
}

}  // namespace folia
