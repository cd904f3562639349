#include "folia/mero_field.hpp"

namespace folia {

std::string to_string(ChartId c) {
  switch (c) {
    case ChartId::AFFINE: return "AFFINE";
    case ChartId::U_CHART: return "U_CHART";
    case ChartId::S_CHART: return "S_CHART";
    case ChartId::LOCAL: return "LOCAL";
  }
  return "?";
}

MeroField::MeroField(ChartId chart, BiPoly f, BiPoly g, const PolyVectorField& z) : chart_(chart) {
  if (f.is_zero() || z.is_zero()) throw std::invalid_argument("meromorphic field is identically zero");
  if (g.is_zero()) throw std::invalid_argument("meromorphic field with zero denominator");
  SaturationResult sat = saturate(z);
  f *= sat.scalar;
  BiPoly h = gcd(f, g);
  f = exact_div(f, h);
  g = exact_div(g, h);
  Gauss unit = f.lead().second / g.lead().second;
  f_ = f.monic();
  g_ = g.monic();
  z_ = sat.core.scaled(unit);
}

MeroField MeroField::from_rational(ChartId chart, const RatField& r) {
  // common denominator, then push the numerator gcd into the scalar
  BiPoly den = r.a.den() * exact_div(r.b.den(), gcd(r.a.den(), r.b.den()));
  BiPoly a = r.a.num() * exact_div(den, r.a.den());
  BiPoly b = r.b.num() * exact_div(den, r.b.den());
  return MeroField(chart, BiPoly(1), den, {a, b});
}

RatField MeroField::as_rational() const {
  RatFunc s(f_, g_);
  return {s * RatFunc(z_.p), s * RatFunc(z_.q)};
}

MeroField MeroField::translate(const Gauss& a, const Gauss& b) const {
  return MeroField(chart_, f_.translate(a, b), g_.translate(a, b), z_.translate(a, b));
}

MeroField MeroField::scaled(const Gauss& c) const {
  MeroField out = *this;
  out.z_ = z_.scaled(c);
  return out;
}

MeroField MeroField::with_chart(ChartId c) const {
  MeroField out = *this;
  out.chart_ = c;
  return out;
}

MeroField MeroField::swapped() const {
  return MeroField(chart_, f_.swapped(), g_.swapped(), z_.swapped());
}

int MeroField::divisor_order(const BiPoly& h) const {
  if (h.is_constant()) throw std::invalid_argument("divisor order along a constant");
  auto count = [&](BiPoly p) {
    int k = 0;
    while (auto q = try_divide(p, h)) {
      p = std::move(*q);
      ++k;
    }
    return k;
  };
  return count(f_) - count(g_);
}

std::string to_string(const MeroField& m) {
  std::string s = "(" + to_string(m.num()) + ")";
  if (!m.den().is_constant()) s += "/(" + to_string(m.den()) + ")";
  return s + " * [" + to_string(m.core()) + "]";
}

}  // namespace folia
