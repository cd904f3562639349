#include "folia/plane_field.hpp"

#include <algorithm>

namespace folia {

int PolyVectorField::order() const {
  if (p.is_zero()) return q.order();
  if (q.is_zero()) return p.order();
  return std::min(p.order(), q.order());
}

std::vector<std::pair<int, BiPoly>> homogeneous_parts(const BiPoly& p) {
  std::vector<std::pair<int, BiPoly>> out;
  for (const auto& [e, c] : p.terms()) {
    int d = e.first + e.second;
    if (out.empty() || out.back().first != d) out.emplace_back(d, BiPoly());
    out.back().second += BiPoly::monomial(e.first, e.second, c);
  }
  return out;
}

SaturationResult saturate(const PolyVectorField& x) {
  if (x.is_zero()) throw std::invalid_argument("cannot saturate the zero field");
  BiPoly g = gcd(x.p, x.q);
  SaturationResult out;
  out.scalar = g;
  out.core = {exact_div(x.p, g), exact_div(x.q, g)};
  out.scalar_degree = g.degree();
  out.core_degree = out.core.degree();
  return out;
}

bool infinity_invariant(const PolyVectorField& x) {
  int d = x.degree();
  PolyVectorField top = x.homogeneous_part(d);
  return !(BiPoly::y() * top.p - BiPoly::x() * top.q).is_zero();
}

int foliation_order_at(const PolyVectorField& x, const Gauss& x0, const Gauss& y0) {
  return saturate(x).core.translate(x0, y0).order();
}

CommonZeros affine_singularities(const PolyVectorField& x) {
  PolyVectorField z = saturate(x).core;
  if (z.p.is_zero() || z.q.is_zero()) return {};  // core is a constant direction
  return common_zeros(z.p, z.q);
}

namespace {

std::string term_text(const Gauss& c, const Exponent& e, bool first) {
  bool neg = c.is_real() && sgn(c.re()) < 0;
  std::string out = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  std::string cs = to_string(neg ? -c : c);
  std::string mono;
  auto add = [&](const char* v, int k) {
    if (k == 0) return;
    if (!mono.empty()) mono += "*";
    mono += v;
    if (k > 1) mono += "^" + std::to_string(k);
  };
  add("x", e.first);
  add("y", e.second);
  if (mono.empty()) {
    if (cs != "1") out += cs + " ";
  } else {
    if (cs != "1") out += cs + "*";
    out += mono + " ";
  }
  return out;
}

}  // namespace

std::string to_string(const PolyVectorField& x) {
  if (x.is_zero()) return "0";
  std::string out;
  auto emit = [&](const BiPoly& comp, const char* d) {
    for (auto it = comp.terms().rbegin(); it != comp.terms().rend(); ++it) {
      out += term_text(it->second, it->first, out.empty());
      out += d;
    }
  };
  emit(x.p, "Dx");
  emit(x.q, "Dy");
  return out;
}

}  // namespace folia
