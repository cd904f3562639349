#include "folia/unipoly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace folia {

UniPoly::UniPoly(std::vector<Gauss> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(int degree, const Gauss& c) {
  std::vector<Gauss> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int UniPoly::order() const {
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (!c_[k].is_zero()) return static_cast<int>(k);
  }
  return -1;
}

Gauss UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Gauss(0);
  return c_[static_cast<std::size_t>(k)];
}

Gauss UniPoly::operator()(const Gauss& at) const {
  Gauss acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Gauss> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly operator*(UniPoly a, const Gauss& c) {
  for (auto& v : a.c_) v *= c;
  a.trim();
  return a;
}

UniPoly UniPoly::operator-() const { return *this * Gauss(-1); }

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Gauss> out(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * Gauss(static_cast<long>(k));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * lead().inverse();
}

UniPoly UniPoly::shifted(const Gauss& a) const {
  // Horner in the ring: p(x+a) = (...(c_n (x+a) + c_{n-1})(x+a) ...)
  UniPoly xa(std::vector<Gauss>{a, Gauss(1)});
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xa + UniPoly(*it);
  return acc;
}

UniPoly UniPoly::truncated(int n) const {
  if (n <= 0) return {};
  std::vector<Gauss> out(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(n, static_cast<std::ptrdiff_t>(c_.size())));
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Gauss> rem = a.coeffs();
  std::vector<Gauss> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  Gauss inv = b.lead().inverse();
  const auto& bc = b.coeffs();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Gauss q = rem[static_cast<std::size_t>(k + b.degree())] * inv;
    quo[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * bc[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly pow(const UniPoly& p, unsigned e) {
  UniPoly result(Gauss(1));
  UniPoly b = p;
  while (e > 0) {
    if (e & 1U) result = result * b;
    b = b * b;
    e >>= 1U;
  }
  return result;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

UniPoly series_inverse(const UniPoly& p, int n) {
  if (p.coeff(0).is_zero()) throw std::domain_error("series inverse of a non-unit");
  std::vector<Gauss> out(static_cast<std::size_t>(std::max(n, 0)));
  Gauss inv0 = p.coeff(0).inverse();
  for (int k = 0; k < n; ++k) {
    Gauss acc = k == 0 ? Gauss(1) : Gauss(0);
    for (int j = 1; j <= k; ++j) acc -= p.coeff(j) * out[static_cast<std::size_t>(k - j)];
    out[static_cast<std::size_t>(k)] = acc * inv0;
  }
  return UniPoly(std::move(out));
}

namespace {

using CLD = std::complex<long double>;

/// Complex number with GMP float parts, for high-precision Newton polishing.
struct MpfComplex {
  mpf_class re;
  mpf_class im;
};

MpfComplex mul(const MpfComplex& a, const MpfComplex& b, mp_bitcnt_t prec) {
  MpfComplex out{mpf_class(0, prec), mpf_class(0, prec)};
  out.re = a.re * b.re - a.im * b.im;
  out.im = a.re * b.im + a.im * b.re;
  return out;
}

CLD to_cld(const Gauss& g) {
  return {static_cast<long double>(g.re().get_d()), static_cast<long double>(g.im().get_d())};
}

/// Simultaneous root approximation (Aberth-Ehrlich) for a squarefree polynomial.
std::vector<CLD> approximate_roots(const UniPoly& p) {
  const int n = p.degree();
  std::vector<CLD> c;
  c.reserve(static_cast<std::size_t>(n) + 1);
  for (const auto& g : p.coeffs()) c.push_back(to_cld(g));
  CLD lead = c.back();
  for (auto& v : c) v /= lead;
  long double radius = 0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::pow(std::abs(c[static_cast<std::size_t>(k)]), 1.0L / (n - k)));
  radius = std::max(radius, 1e-3L);
  std::vector<CLD> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    long double ang = 2.0L * 3.14159265358979323846L * k / n + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius, ang);
  }
  auto eval = [&](CLD x, CLD& dp) {
    CLD v = c.back();
    dp = 0;
    for (int k = n - 1; k >= 0; --k) {
      dp = dp * x + v;
      v = v * x + c[static_cast<std::size_t>(k)];
    }
    return v;
  };
  for (int iter = 0; iter < 500; ++iter) {
    long double worst = 0;
    for (int i = 0; i < n; ++i) {
      CLD dp;
      CLD v = eval(z[static_cast<std::size_t>(i)], dp);
      if (std::abs(dp) == 0) continue;
      CLD ratio = v / dp;
      CLD sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != i) sum += 1.0L / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
      }
      CLD step = ratio / (1.0L - ratio * sum);
      z[static_cast<std::size_t>(i)] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[static_cast<std::size_t>(i)])));
    }
    if (worst < 1e-17L) break;
  }
  return z;
}

/// Clears denominators so that every coefficient is a Gaussian integer.
std::vector<std::pair<Int, Int>> integral_coefficients(const UniPoly& p) {
  Int l = 1;
  for (const auto& g : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g.im().get_den_mpz_t());
  }
  std::vector<std::pair<Int, Int>> out;
  for (const auto& g : p.coeffs()) {
    Rat re = g.re() * l;
    Rat im = g.im() * l;
    out.emplace_back(re.get_num(), im.get_num());
  }
  return out;
}

Int round_mpf(const mpf_class& v) {
  mpf_class shifted = v + mpf_class(0.5, v.get_prec());
  mpf_class fl = floor(shifted);
  return Int(fl);
}

/// Searches for a root in Q(i) of the squarefree polynomial p near `approx`.
std::optional<Gauss> rational_root_near(const UniPoly& p, CLD approx) {
  auto ic = integral_coefficients(p);
  const auto& lead = ic.back();
  std::size_t bits = 64;
  for (const auto& [re, im] : ic) bits = std::max({bits, mpz_sizeinbase(re.get_mpz_t(), 2), mpz_sizeinbase(im.get_mpz_t(), 2)});
  mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(4 * bits + 128);
  auto mpf_of = [&](const Int& v) { return mpf_class(v, prec); };
  MpfComplex z{mpf_class(static_cast<double>(approx.real()), prec), mpf_class(static_cast<double>(approx.imag()), prec)};
  for (int iter = 0; iter < 200; ++iter) {
    MpfComplex v{mpf_class(0, prec), mpf_class(0, prec)};
    MpfComplex d{mpf_class(0, prec), mpf_class(0, prec)};
    for (auto it = ic.rbegin(); it != ic.rend(); ++it) {
      d = mul(d, z, prec);
      d.re += v.re;
      d.im += v.im;
      v = mul(v, z, prec);
      v.re += mpf_of(it->first);
      v.im += mpf_of(it->second);
    }
    mpf_class den = d.re * d.re + d.im * d.im;
    if (den == 0) break;
    MpfComplex step{(v.re * d.re + v.im * d.im) / den, (v.im * d.re - v.re * d.im) / den};
    z.re -= step.re;
    z.im -= step.im;
    mpf_class mag = abs(step.re) + abs(step.im);
    mpf_class scale = abs(z.re) + abs(z.im) + 1;
    if (mag == 0 || mag / scale < mpf_class(1, prec) >> static_cast<mp_bitcnt_t>(prec - 16)) break;
  }
  // lead * root is a Gaussian integer when the root lies in Q(i)
  MpfComplex scaled = mul(z, MpfComplex{mpf_of(lead.first), mpf_of(lead.second)}, prec);
  Gauss lead_g(Rat(lead.first), Rat(lead.second));
  Gauss cand = Gauss(Rat(round_mpf(scaled.re)), Rat(round_mpf(scaled.im))) / lead_g;
  if (p(cand).is_zero()) return cand;
  return std::nullopt;
}

}  // namespace

RootFactorization rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  RootFactorization out;
  out.unit = p.lead();
  UniPoly rest = p.monic();
  std::vector<Gauss> found;
  int zero_mult = rest.order();
  if (zero_mult > 0) {
    found.emplace_back(0);
    rest = UniPoly(std::vector<Gauss>(rest.coeffs().begin() + zero_mult, rest.coeffs().end()));
  }
  if (rest.degree() >= 1) {
    UniPoly sqf = exact_div(rest, gcd(rest, rest.derivative())).monic();
    for (int attempt = 0; attempt < 2 && sqf.degree() >= 1; ++attempt) {
      if (sqf.degree() == 1) {
        found.push_back(-sqf.coeff(0));
        sqf = UniPoly(Gauss(1));
        break;
      }
      bool progress = false;
      for (const auto& approx : approximate_roots(sqf)) {
        if (auto r = rational_root_near(sqf, approx)) {
          found.push_back(*r);
          sqf = exact_div(sqf, UniPoly(std::vector<Gauss>{-*r, Gauss(1)}));
          progress = true;
          if (sqf.degree() == 1) {
            found.push_back(-sqf.monic().coeff(0));
            sqf = UniPoly(Gauss(1));
            break;
          }
          if (sqf.degree() < 1) break;
        }
      }
      if (!progress) break;
    }
  }
  UniPoly residual = p.monic();
  for (const auto& r : found) {
    UniPoly lin(std::vector<Gauss>{-r, Gauss(1)});
    int mult = 0;
    while (true) {
      auto [q, rem] = divmod(residual, lin);
      if (!rem.is_zero()) break;
      residual = q;
      ++mult;
    }
    if (mult > 0) out.roots.emplace_back(r, mult);
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  out.residual = residual.monic();
  return out;
}

std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Gauss& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string cs = to_string(c);
    bool neg = c.is_real() && sgn(c.re()) < 0;
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (neg) cs = to_string(-c);
    if (k == 0) {
      out += cs;
      continue;
    }
    if (cs != "1") out += cs + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace folia
