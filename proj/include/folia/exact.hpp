#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace folia {

/// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;

/// Error raised when an analysis cannot be carried out exactly
/// (non-rational points, truncation exhausted, violated preconditions).
class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_string(const Rat& r);

/// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rat> rat_sqrt(const Rat& r);

/// Element of Q(i).
class Gauss {
 public:
  Gauss() = default;
  Gauss(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Gauss(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  Gauss(Rat re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Gauss(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Gauss i() { return Gauss(Rat(0), Rat(1)); }

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Gauss conj() const { return Gauss(re_, -im_); }
  Rat norm() const { return re_ * re_ + im_ * im_; }
  Gauss inverse() const;

  Gauss& operator+=(const Gauss& o);
  Gauss& operator-=(const Gauss& o);
  Gauss& operator*=(const Gauss& o);
  Gauss& operator/=(const Gauss& o);

  friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
  friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
  friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
  friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
  Gauss operator-() const { return Gauss(-re_, -im_); }

  friend bool operator==(const Gauss& a, const Gauss& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }

  /// Total order (lexicographic on real then imaginary part); used only for
  /// deterministic sorting, carries no field meaning.
  friend bool lex_less(const Gauss& a, const Gauss& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

 private:
  Rat re_{0};
  Rat im_{0};
};

Gauss pow(const Gauss& base, unsigned exp);

/// Exact square root in Q(i), if one exists.
std::optional<Gauss> gauss_sqrt(const Gauss& z);

/// Canonical text: "3", "-1/2", "(1+2i)", "(1/3-i)", "i".
std::string to_string(const Gauss& z);
std::ostream& operator<<(std::ostream& os, const Gauss& z);

/// Parses the canonical text produced by to_string.
Gauss parse_gauss(const std::string& text);

}  // namespace folia
