#include "folia/ratfunc.hpp"

namespace folia {

RatFunc::RatFunc(BiPoly num, BiPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = BiPoly(1);
    return;
  }
  BiPoly g = gcd(num, den);
  num = exact_div(num, g);
  den = exact_div(den, g);
  Gauss lc = den.lead().second;
  num_ = num.scaled(lc.inverse());
  den_ = den.monic();
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) return *this = RatFunc(num_ + o.num_, den_);
  return *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) { return *this = RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  return *this = RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::dx() const {
  return RatFunc(num_.dx() * den_ - num_ * den_.dx(), den_ * den_);
}

RatFunc RatFunc::dy() const {
  return RatFunc(num_.dy() * den_ - num_ * den_.dy(), den_ * den_);
}

namespace {

/// p(X, Y) with rational arguments, collected over a common denominator.
RatFunc compose_poly(const BiPoly& p, const RatFunc& X, const RatFunc& Y) {
  if (p.is_zero()) return {};
  int dx = p.degree_x();
  int dy = p.degree_y();
  // p(X,Y) = sum c X.n^i X.d^(dx-i) Y.n^j Y.d^(dy-j) / (X.d^dx Y.d^dy)
  std::vector<BiPoly> xn{BiPoly(1)}, xd{BiPoly(1)}, yn{BiPoly(1)}, yd{BiPoly(1)};
  for (int k = 0; k < dx; ++k) {
    xn.push_back(xn.back() * X.num());
    xd.push_back(xd.back() * X.den());
  }
  for (int k = 0; k < dy; ++k) {
    yn.push_back(yn.back() * Y.num());
    yd.push_back(yd.back() * Y.den());
  }
  BiPoly num;
  for (const auto& [e, c] : p.terms()) {
    auto i = static_cast<std::size_t>(e.first);
    auto j = static_cast<std::size_t>(e.second);
    num += (xn[i] * xd[static_cast<std::size_t>(dx) - i] * yn[j] * yd[static_cast<std::size_t>(dy) - j]).scaled(c);
  }
  return RatFunc(num, xd.back() * yd.back());
}

}  // namespace

RatFunc RatFunc::compose(const RatFunc& X, const RatFunc& Y) const {
  return compose_poly(num_, X, Y) / compose_poly(den_, X, Y);
}

RatFunc pow(const RatFunc& r, int e) {
  if (e < 0) return RatFunc(BiPoly(1)) / pow(r, -e);
  RatFunc out(BiPoly(1));
  for (int k = 0; k < e; ++k) out *= r;
  return out;
}

RatField pullback(const RatField& X, const RatFunc& p1, const RatFunc& p2) {
  RatFunc a = X.a.compose(p1, p2);
  RatFunc b = X.b.compose(p1, p2);
  // Jacobian of phi in (u,v), inverted by Cramer
  RatFunc j11 = p1.dx(), j12 = p1.dy(), j21 = p2.dx(), j22 = p2.dy();
  RatFunc det = j11 * j22 - j12 * j21;
  if (det.is_zero()) throw AnalysisError("pullback through a degenerate map");
  return {(j22 * a - j12 * b) / det, (j11 * b - j21 * a) / det};
}

std::string to_string(const RatFunc& r, const std::string& vx, const std::string& vy) {
  std::string n = to_string(r.num(), vx, vy);
  if (r.is_polynomial()) return n;
  return "(" + n + ")/(" + to_string(r.den(), vx, vy) + ")";
}

}  // namespace folia
