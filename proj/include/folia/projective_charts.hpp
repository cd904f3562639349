#pragma once

#include <string>
#include <utility>
#include <vector>

#include "folia/local_invariants.hpp"

namespace folia {

/// Extension of X to a chart at infinity, computed by the closed-form
/// chart formulas.
MeroField to_chart(const PolyVectorField& x, ChartId target);

/// Chart coordinates expressed through affine (x, y), and back.
std::pair<RatFunc, RatFunc> affine_to_chart(ChartId c);
std::pair<RatFunc, RatFunc> chart_to_affine(ChartId c);

/// Moves a field between projective charts by pullback along the transition map.
MeroField transport(const MeroField& m, ChartId target);

/// Whether a and b represent the same projective field.
bool cross_chart_check(const MeroField& a, const MeroField& b);

/// Equation of the line at infinity in a chart.
BiPoly infinity_line(ChartId c);

/// Pole order (positive for a pole) of the chart field along the line at infinity.
int pole_order_at_infinity(const MeroField& m);

enum class DicriticalHint { YES, NO, NEEDS_RESOLUTION };
std::string to_string(DicriticalHint h);
DicriticalHint dicritical_hint(const Classification& c);

struct InfinitySingularity {
  ChartId chart = ChartId::U_CHART;
  std::pair<Gauss, Gauss> location;
  Classification classification;
  DicriticalHint hint = DicriticalHint::NO;
  /// Chart field recentred at the point.
  MeroField germ;
};

struct InfinityScan {
  std::vector<InfinitySingularity> points;
  bool complete = true;
  std::string unresolved;
};

/// Singular points on the chart's copy of the line at infinity.
InfinityScan scan_chart(const PolyVectorField& x, ChartId c, int trunc = 32);

/// Singular points of the saturated foliation on the line at infinity:
/// every point of the U chart plus the origin of the S chart.
InfinityScan singularities_at_infinity(const PolyVectorField& x, int trunc = 32);

}  // namespace folia
