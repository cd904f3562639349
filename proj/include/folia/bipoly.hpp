#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folia/exact.hpp"
#include "folia/unipoly.hpp"

namespace folia {

using Exponent = std::pair<int, int>;

/// Graded order on exponents: total degree first, then the larger x-exponent wins.
struct Grlex {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = a.first + a.second;
    int db = b.first + b.second;
    if (da != db) return da < db;
    return a.first < b.first;
  }
};

/// Sparse polynomial in two variables over Q(i).
class BiPoly {
 public:
  using Terms = std::map<Exponent, Gauss, Grlex>;

  BiPoly() = default;
  BiPoly(const Gauss& c);  // NOLINT
  BiPoly(long c) : BiPoly(Gauss(c)) {}  // NOLINT
  BiPoly(int c) : BiPoly(Gauss(c)) {}   // NOLINT

  static BiPoly x() { return monomial(1, 0); }
  static BiPoly y() { return monomial(0, 1); }
  static BiPoly monomial(int i, int j, const Gauss& c = Gauss(1));
  /// Embeds p(x) (or p(y) when in_y is set).
  static BiPoly from_uni(const UniPoly& p, bool in_y = false);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  /// -1 for zero.
  int degree() const;
  /// Lowest total degree of a term (order at the origin); -1 for zero.
  int order() const;
  int degree_x() const;
  int degree_y() const;
  /// Largest k with x^k dividing p; -1 for zero.
  int val_x() const;
  int val_y() const;

  const Terms& terms() const { return t_; }
  Gauss coeff(int i, int j) const;
  /// Leading term in the graded order.
  std::pair<Exponent, Gauss> lead() const;
  Gauss constant_term() const { return coeff(0, 0); }

  Gauss operator()(const Gauss& x, const Gauss& y) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  BiPoly operator-() const;
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly scaled(const Gauss& c) const;
  BiPoly dx() const;
  BiPoly dy() const;
  BiPoly homogeneous_part(int k) const;
  /// Terms of total degree below k.
  BiPoly truncated(int k) const;
  BiPoly swapped() const;
  /// Multiplies by x^a y^b; negative shifts must divide exactly.
  BiPoly shifted(int a, int b) const;
  /// Divides by the grlex leading coefficient.
  BiPoly monic() const;

  /// p(X(x,y), Y(x,y)).
  BiPoly compose(const BiPoly& X, const BiPoly& Y) const;
  /// p(X, Y) keeping only terms of total degree <= max_degree.
  BiPoly compose_truncated(const BiPoly& X, const BiPoly& Y, int max_degree) const;
  /// p(x + a, y + b).
  BiPoly translate(const Gauss& a, const Gauss& b) const;
  /// p(x, c) as a polynomial in x.
  UniPoly at_y(const Gauss& c) const;
  /// p(c, y) as a polynomial in y.
  UniPoly at_x(const Gauss& c) const;

  /// Coefficients in y, each a polynomial in x (index k multiplies y^k).
  std::vector<UniPoly> coeffs_in_y() const;
  static BiPoly from_coeffs_in_y(const std::vector<UniPoly>& c);

 private:
  Terms t_;
};

BiPoly pow(const BiPoly& p, unsigned e);
/// a * b without the terms of total degree above max_degree.
BiPoly mul_truncated(const BiPoly& a, const BiPoly& b, int max_degree);

/// Quotient when b divides a.
std::optional<BiPoly> try_divide(const BiPoly& a, const BiPoly& b);
/// a / b, throwing when b does not divide a.
BiPoly exact_div(const BiPoly& a, const BiPoly& b);
/// Gcd normalized to be monic; gcd(0, 0) = 0.
BiPoly gcd(const BiPoly& a, const BiPoly& b);
/// Product of the distinct irreducible factors (up to a constant), monic.
BiPoly squarefree_part(const BiPoly& p);

/// Resultant with respect to y, as a polynomial in x.
UniPoly resultant_y(const BiPoly& a, const BiPoly& b);

/// Local intersection number at the origin; nullopt when the curves share
/// a component through the origin.
std::optional<int> intersection_multiplicity(const BiPoly& f, const BiPoly& g);

/// Common zeros in Q(i)^2.  `complete` is false when some common zero
/// could not be expressed in Q(i).
struct CommonZeros {
  std::vector<std::pair<Gauss, Gauss>> points;
  bool complete = true;
  std::string unresolved;
};
CommonZeros common_zeros(const BiPoly& a, const BiPoly& b);

std::string to_string(const BiPoly& p, const std::string& vx = "x", const std::string& vy = "y");

}  // namespace folia
