#pragma once

#include <string>

#include "folia/bipoly.hpp"

namespace folia {

/// Reduced quotient of bivariate polynomials with monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(BiPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RatFunc(BiPoly num, BiPoly den);

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc dx() const;
  RatFunc dy() const;
  /// r(X, Y) for rational X, Y.
  RatFunc compose(const RatFunc& X, const RatFunc& Y) const;

 private:
  BiPoly num_;
  BiPoly den_;
};

RatFunc pow(const RatFunc& r, int e);

/// Vector field with rational components, a(x,y) d/dx + b(x,y) d/dy.
struct RatField {
  RatFunc a;
  RatFunc b;
};

/// Pullback of X through the rational map phi(u,v) = (p1, p2):
/// the field Y on (u,v) with dphi(Y) = X o phi.
RatField pullback(const RatField& X, const RatFunc& p1, const RatFunc& p2);

std::string to_string(const RatFunc& r, const std::string& vx = "x", const std::string& vy = "y");

}  // namespace folia
