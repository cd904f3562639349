#include <algorithm>

#include "folia/bipoly.hpp"

namespace folia {

namespace {

using YPoly = std::vector<UniPoly>;  // coefficients in y over Q(i)[x]

void trim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int ydeg(const YPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly content(const YPoly& p) {
  UniPoly c;
  for (const auto& v : p) {
    c = gcd(c, v);
    if (c.degree() == 0) break;
  }
  return c;
}

YPoly primitive(const YPoly& p) {
  if (p.empty()) return p;
  UniPoly c = content(p);
  YPoly out;
  out.reserve(p.size());
  for (const auto& v : p) out.push_back(exact_div(v, c));
  // normalize the leading coefficient to be monic in x to keep sizes small
  Gauss s = out.back().lead().inverse();
  for (auto& v : out) v = v * s;
  return out;
}

YPoly pseudo_remainder(YPoly a, const YPoly& b) {
  const UniPoly& lc = b.back();
  int n = ydeg(b);
  while (!a.empty() && ydeg(a) >= n) {
    UniPoly la = a.back();
    int shift = ydeg(a) - n;
    for (auto& v : a) v = v * lc;
    for (int k = 0; k <= n; ++k) a[static_cast<std::size_t>(k + shift)] -= la * b[static_cast<std::size_t>(k)];
    trim(a);
  }
  return a;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  int mx = std::min(a.val_x(), b.val_x());
  int my = std::min(a.val_y(), b.val_y());
  BiPoly mono = BiPoly::monomial(mx, my);
  BiPoly ra = a.shifted(-a.val_x(), -a.val_y());
  BiPoly rb = b.shifted(-b.val_x(), -b.val_y());
  if (ra.is_constant() || rb.is_constant()) return mono;
  if (mx > 0 || my > 0 || ra != a || rb != b) {
    // the monomial and monomial-free parts split the gcd
    return mono * gcd(ra, rb);
  }
  YPoly A = a.coeffs_in_y();
  YPoly B = b.coeffs_in_y();
  UniPoly c = gcd(content(A), content(B));
  A = primitive(A);
  B = primitive(B);
  if (ydeg(A) < ydeg(B)) std::swap(A, B);
  YPoly g;
  while (true) {
    if (ydeg(B) == 0) {
      g = YPoly{UniPoly(Gauss(1))};
      break;
    }
    YPoly r = pseudo_remainder(A, B);
    if (r.empty()) {
      g = B;
      break;
    }
    A = std::move(B);
    B = primitive(r);
  }
  for (auto& v : g) v = v * c;
  return BiPoly::from_coeffs_in_y(g).monic();
}

BiPoly squarefree_part(const BiPoly& p) {
  if (p.is_zero() || p.is_constant()) return p.is_zero() ? p : BiPoly(1);
  BiPoly g = gcd(p, gcd(p.dx(), p.dy()));
  return exact_div(p, g).monic();
}

UniPoly resultant_y(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  YPoly A = a.coeffs_in_y();
  YPoly B = b.coeffs_in_y();
  int m = ydeg(A);
  int n = ydeg(B);
  if (m == 0) return pow(A[0], static_cast<unsigned>(n));
  if (n == 0) return pow(B[0], static_cast<unsigned>(m));
  int N = m + n;
  std::vector<std::vector<UniPoly>> M(static_cast<std::size_t>(N), std::vector<UniPoly>(static_cast<std::size_t>(N)));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = A[static_cast<std::size_t>(m - k)];
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= n; ++k) M[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + k)] = B[static_cast<std::size_t>(n - k)];
  }
  // fraction-free Gaussian elimination
  UniPoly prev(Gauss(1));
  bool negate = false;
  for (int k = 0; k < N - 1; ++k) {
    auto ku = static_cast<std::size_t>(k);
    if (M[ku][ku].is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < N; ++i) {
        if (!M[static_cast<std::size_t>(i)][ku].is_zero()) {
          piv = i;
          break;
        }
      }
      if (piv < 0) return {};
      std::swap(M[ku], M[static_cast<std::size_t>(piv)]);
      negate = !negate;
    }
    for (int i = k + 1; i < N; ++i) {
      auto iu = static_cast<std::size_t>(i);
      for (int j = k + 1; j < N; ++j) {
        auto ju = static_cast<std::size_t>(j);
        M[iu][ju] = exact_div(M[iu][ju] * M[ku][ku] - M[iu][ku] * M[ku][ju], prev);
      }
      M[iu][ku] = UniPoly();
    }
    prev = M[ku][ku];
  }
  UniPoly det = M[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(N - 1)];
  return negate ? -det : det;
}

namespace {

int fulton(BiPoly F, BiPoly G) {
  int acc = 0;
  while (true) {
    if (!F.constant_term().is_zero() || !G.constant_term().is_zero()) return acc;
    UniPoly f = F.at_y(Gauss(0));
    UniPoly g = G.at_y(Gauss(0));
    if (f.is_zero()) {
      // F = y H and I(y, G) = ord_x G(x, 0)
      acc += g.order();
      F = exact_div(F, BiPoly::y());
      continue;
    }
    if (g.is_zero()) {
      acc += f.order();
      G = exact_div(G, BiPoly::y());
      continue;
    }
    if (f.degree() > g.degree()) {
      std::swap(F, G);
      std::swap(f, g);
    }
    G -= F.shifted(g.degree() - f.degree(), 0).scaled(g.lead() / f.lead());
  }
}

}  // namespace

std::optional<int> intersection_multiplicity(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) return std::nullopt;
  if (gcd(f, g).constant_term().is_zero()) return std::nullopt;
  return fulton(f, g);
}

CommonZeros common_zeros(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero() || !gcd(a, b).is_constant()) {
    throw AnalysisError("common zeros are not isolated");
  }
  CommonZeros out;
  UniPoly R = resultant_y(a, b);
  if (R.degree() <= 0) return out;
  auto xr = rational_roots(R);
  if (xr.residual.degree() > 0) {
    out.complete = false;
    out.unresolved = "x-coordinates: " + to_string(xr.residual, "x");
  }
  for (const auto& [x0, mult] : xr.roots) {
    UniPoly h = gcd(a.at_x(x0), b.at_x(x0));
    if (h.degree() <= 0) continue;
    auto yr = rational_roots(h);
    if (yr.residual.degree() > 0) {
      out.complete = false;
      if (!out.unresolved.empty()) out.unresolved += "; ";
      out.unresolved += "y-coordinates over x=" + to_string(x0) + ": " + to_string(yr.residual, "y");
    }
    for (const auto& [y0, m] : yr.roots) out.points.emplace_back(x0, y0);
  }
  std::sort(out.points.begin(), out.points.end(), [](const auto& p, const auto& q) {
    if (p.first != q.first) return lex_less(p.first, q.first);
    return lex_less(p.second, q.second);
  });
  return out;
}

}  // namespace folia
