#pragma once

#include <random>

#include "folia/bipoly.hpp"

namespace folia::gen {

/// Small deterministic generators for property tests.
struct Source {
  std::mt19937_64 rng;
  explicit Source(std::uint64_t seed) : rng(seed) {}

  long small(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

  Rat rat(long span = 5) {
    long den = small(1, 3);
    return Rat(small(-span, span), den);
  }

  Gauss gauss(bool complex_ok = true) {
    if (!complex_ok || small(0, 3) != 0) return Gauss(rat());
    return Gauss(rat(), rat());
  }

  Gauss nonzero_gauss(bool complex_ok = true) {
    Gauss g;
    do g = gauss(complex_ok);
    while (g.is_zero());
    return g;
  }

  BiPoly poly(int max_degree, int terms, bool complex_ok = false) {
    BiPoly p;
    for (int k = 0; k < terms; ++k) {
      int d = static_cast<int>(small(0, max_degree));
      int i = static_cast<int>(small(0, d));
      p += BiPoly::monomial(i, d - i, gauss(complex_ok));
    }
    return p;
  }

  UniPoly uni(int degree) {
    std::vector<Gauss> c;
    for (int k = 0; k < degree; ++k) c.push_back(gauss());
    c.push_back(nonzero_gauss());
    return UniPoly(c);
  }
};

}  // namespace folia::gen
