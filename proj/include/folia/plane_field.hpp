#pragma once

#include <string>
#include <utility>
#include <vector>

#include "folia/bipoly.hpp"

namespace folia {

/// X = p d/dx + q d/dy.
struct PolyVectorField {
  BiPoly p;
  BiPoly q;

  bool is_zero() const { return p.is_zero() && q.is_zero(); }
  int degree() const { return std::max(p.degree(), q.degree()); }
  /// Lowest degree of a nonvanishing jet at the origin.
  int order() const;
  PolyVectorField homogeneous_part(int k) const { return {p.homogeneous_part(k), q.homogeneous_part(k)}; }
  PolyVectorField scaled(const Gauss& c) const { return {p.scaled(c), q.scaled(c)}; }
  PolyVectorField times(const BiPoly& h) const { return {p * h, q * h}; }
  PolyVectorField translate(const Gauss& a, const Gauss& b) const { return {p.translate(a, b), q.translate(a, b)}; }
  PolyVectorField swapped() const { return {q.swapped(), p.swapped()}; }
  /// Derivative of h along the field.
  BiPoly apply(const BiPoly& h) const { return p * h.dx() + q * h.dy(); }

  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) { return a.p == b.p && a.q == b.q; }
  friend bool operator!=(const PolyVectorField& a, const PolyVectorField& b) { return !(a == b); }
};

/// Sorted nonzero homogeneous components.
std::vector<std::pair<int, BiPoly>> homogeneous_parts(const BiPoly& p);

struct SaturationResult {
  BiPoly scalar;
  PolyVectorField core;
  int scalar_degree = 0;
  int core_degree = 0;
};

/// X = F * Z with Z having coprime components; F is monic.
SaturationResult saturate(const PolyVectorField& x);

/// Whether the line at infinity is invariant by the extended foliation.
bool infinity_invariant(const PolyVectorField& x);

/// Order of the saturated foliation at a point (0 iff regular).
int foliation_order_at(const PolyVectorField& x, const Gauss& x0, const Gauss& y0);

/// Singular points of the saturated core in Q(i)^2.
CommonZeros affine_singularities(const PolyVectorField& x);

/// Canonical text in the input grammar, e.g. "x^2*y Dx - x*y^2 Dy".
std::string to_string(const PolyVectorField& x);

}  // namespace folia
