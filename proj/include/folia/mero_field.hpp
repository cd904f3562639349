#pragma once

#include <string>

#include "folia/plane_field.hpp"
#include "folia/ratfunc.hpp"

namespace folia {

enum class ChartId { AFFINE, U_CHART, S_CHART, LOCAL };

std::string to_string(ChartId c);

/// (f/g) * Z with f, g coprime and monic and Z saturated; every constant
/// factor lives in Z, so equal fields have equal representations.
class MeroField {
 public:
  MeroField() = default;
  MeroField(ChartId chart, BiPoly f, BiPoly g, const PolyVectorField& z);
  MeroField(ChartId chart, const PolyVectorField& z) : MeroField(chart, BiPoly(1), BiPoly(1), z) {}
  static MeroField from_rational(ChartId chart, const RatField& r);

  ChartId chart() const { return chart_; }
  const BiPoly& num() const { return f_; }
  const BiPoly& den() const { return g_; }
  const PolyVectorField& core() const { return z_; }

  RatField as_rational() const;
  /// The field recentred at (a, b).
  MeroField translate(const Gauss& a, const Gauss& b) const;
  MeroField scaled(const Gauss& c) const;
  MeroField with_chart(ChartId c) const;
  /// Exchanges the roles of the two coordinates.
  MeroField swapped() const;

  /// Zero (>0) or pole (<0) order along the irreducible curve h = 0.
  int divisor_order(const BiPoly& h) const;
  /// Order of the core at the origin; 0 when regular.
  int foliation_order() const { return z_.order(); }

  friend bool operator==(const MeroField& a, const MeroField& b) {
    return a.chart_ == b.chart_ && a.f_ == b.f_ && a.g_ == b.g_ && a.z_ == b.z_;
  }

 private:
  ChartId chart_ = ChartId::LOCAL;
  BiPoly f_{1};
  BiPoly g_{1};
  PolyVectorField z_;
};

std::string to_string(const MeroField& m);

}  // namespace folia
