#pragma once

#include <string>
#include <utility>
#include <vector>

#include "folia/exact.hpp"

namespace folia {

/// Dense univariate polynomial over Q(i), lowest degree first.
/// The zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Gauss> coeffs);
  UniPoly(const Gauss& c) : UniPoly(std::vector<Gauss>{c}) {}  // NOLINT

  static UniPoly x() { return UniPoly(std::vector<Gauss>{Gauss(0), Gauss(1)}); }
  static UniPoly monomial(int degree, const Gauss& c);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Index of the lowest nonzero coefficient; -1 for zero.
  int order() const;
  const Gauss& lead() const { return c_.back(); }
  Gauss coeff(int k) const;
  const std::vector<Gauss>& coeffs() const { return c_; }

  Gauss operator()(const Gauss& at) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Gauss& c);
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly derivative() const;
  UniPoly monic() const;
  /// p(x + a)
  UniPoly shifted(const Gauss& a) const;
  /// Drops x^k for k >= n.
  UniPoly truncated(int n) const;

 private:
  void trim();
  std::vector<Gauss> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly pow(const UniPoly& p, unsigned e);
/// Monic gcd; gcd(0,0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// a / b, throwing when the division leaves a remainder.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

/// Power series of 1/p modulo x^n; p(0) must be nonzero.
UniPoly series_inverse(const UniPoly& p, int n);

struct RootFactorization {
  std::vector<std::pair<Gauss, int>> roots;  // sorted by lex_less
  UniPoly residual;                           // monic, no root in Q(i)
  Gauss unit;                                 // p = unit * prod (x-r)^m * residual
};

/// All roots of p lying in Q(i) with multiplicities.
RootFactorization rational_roots(const UniPoly& p);

std::string to_string(const UniPoly& p, const std::string& var = "x");

}  // namespace folia
