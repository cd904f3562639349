#include "folia/bipoly.hpp"

#include <algorithm>
#include <climits>

namespace folia {

BiPoly::BiPoly(const Gauss& c) {
  if (!c.is_zero()) t_.emplace(Exponent{0, 0}, c);
}

BiPoly BiPoly::monomial(int i, int j, const Gauss& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  BiPoly p;
  if (!c.is_zero()) p.t_.emplace(Exponent{i, j}, c);
  return p;
}

BiPoly BiPoly::from_uni(const UniPoly& p, bool in_y) {
  BiPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Gauss& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    out.t_.emplace(in_y ? Exponent{0, k} : Exponent{k, 0}, c);
  }
  return out;
}

bool BiPoly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exponent{0, 0}); }

int BiPoly::degree() const {
  if (t_.empty()) return -1;
  const auto& e = t_.rbegin()->first;
  return e.first + e.second;
}

int BiPoly::order() const {
  if (t_.empty()) return -1;
  const auto& e = t_.begin()->first;
  return e.first + e.second;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, e.first);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, e.second);
  return d;
}

int BiPoly::val_x() const {
  if (t_.empty()) return -1;
  int v = INT_MAX;
  for (const auto& [e, c] : t_) v = std::min(v, e.first);
  return v;
}

int BiPoly::val_y() const {
  if (t_.empty()) return -1;
  int v = INT_MAX;
  for (const auto& [e, c] : t_) v = std::min(v, e.second);
  return v;
}

Gauss BiPoly::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? Gauss(0) : it->second;
}

std::pair<Exponent, Gauss> BiPoly::lead() const {
  if (t_.empty()) throw std::domain_error("leading term of zero polynomial");
  return *t_.rbegin();
}

Gauss BiPoly::operator()(const Gauss& x, const Gauss& y) const {
  Gauss acc(0);
  for (const auto& [e, c] : t_) acc += c * pow(x, static_cast<unsigned>(e.first)) * pow(y, static_cast<unsigned>(e.second));
  return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.t_) {
    auto [it, inserted] = t_.emplace(e, c);
    if (inserted) continue;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.t_) {
    auto [it, inserted] = t_.emplace(e, -c);
    if (inserted) continue;
    it->second -= c;
    if (it->second.is_zero()) t_.erase(it);
  }
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  Terms out;
  for (const auto& [ea, ca] : t_) {
    for (const auto& [eb, cb] : o.t_) {
      Exponent e{ea.first + eb.first, ea.second + eb.second};
      auto [it, inserted] = out.emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  t_ = std::move(out);
  return *this;
}

BiPoly BiPoly::operator-() const { return scaled(Gauss(-1)); }

BiPoly BiPoly::scaled(const Gauss& c) const {
  if (c.is_zero()) return {};
  BiPoly out = *this;
  for (auto& [e, v] : out.t_) v *= c;
  return out;
}

BiPoly BiPoly::dx() const {
  BiPoly out;
  for (const auto& [e, c] : t_) {
    if (e.first > 0) out.t_.emplace(Exponent{e.first - 1, e.second}, c * Gauss(e.first));
  }
  return out;
}

BiPoly BiPoly::dy() const {
  BiPoly out;
  for (const auto& [e, c] : t_) {
    if (e.second > 0) out.t_.emplace(Exponent{e.first, e.second - 1}, c * Gauss(e.second));
  }
  return out;
}

BiPoly BiPoly::homogeneous_part(int k) const {
  BiPoly out;
  for (const auto& [e, c] : t_) {
    if (e.first + e.second == k) out.t_.emplace(e, c);
  }
  return out;
}

BiPoly BiPoly::truncated(int k) const {
  BiPoly out;
  for (const auto& [e, c] : t_) {
    if (e.first + e.second < k) out.t_.emplace(e, c);
  }
  return out;
}

BiPoly BiPoly::swapped() const {
  BiPoly out;
  for (const auto& [e, c] : t_) out.t_.emplace(Exponent{e.second, e.first}, c);
  return out;
}

BiPoly BiPoly::shifted(int a, int b) const {
  BiPoly out;
  for (const auto& [e, c] : t_) {
    Exponent n{e.first + a, e.second + b};
    if (n.first < 0 || n.second < 0) throw std::domain_error("monomial shift leaves the polynomial ring");
    out.t_.emplace(n, c);
  }
  return out;
}

BiPoly BiPoly::monic() const {
  if (t_.empty()) return {};
  return scaled(lead().second.inverse());
}

BiPoly BiPoly::compose(const BiPoly& X, const BiPoly& Y) const {
  std::vector<BiPoly> xp{BiPoly(1)};
  std::vector<BiPoly> yp{BiPoly(1)};
  BiPoly out;
  for (const auto& [e, c] : t_) {
    while (static_cast<int>(xp.size()) <= e.first) xp.push_back(xp.back() * X);
    while (static_cast<int>(yp.size()) <= e.second) yp.push_back(yp.back() * Y);
    out += (xp[static_cast<std::size_t>(e.first)] * yp[static_cast<std::size_t>(e.second)]).scaled(c);
  }
  return out;
}

BiPoly mul_truncated(const BiPoly& a, const BiPoly& b, int max_degree) {
  BiPoly out;
  for (const auto& [ea, ca] : a.terms()) {
    if (ea.first + ea.second > max_degree) break;
    for (const auto& [eb, cb] : b.terms()) {
      if (ea.first + ea.second + eb.first + eb.second > max_degree) break;
      out += BiPoly::monomial(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
  }
  return out;
}

BiPoly BiPoly::compose_truncated(const BiPoly& X, const BiPoly& Y, int max_degree) const {
  std::vector<BiPoly> xp{BiPoly(1)};
  std::vector<BiPoly> yp{BiPoly(1)};
  BiPoly out;
  for (const auto& [e, c] : t_) {
    while (static_cast<int>(xp.size()) <= e.first) xp.push_back(mul_truncated(xp.back(), X, max_degree));
    while (static_cast<int>(yp.size()) <= e.second) yp.push_back(mul_truncated(yp.back(), Y, max_degree));
    out += mul_truncated(xp[static_cast<std::size_t>(e.first)], yp[static_cast<std::size_t>(e.second)], max_degree).scaled(c);
  }
  return out;
}

BiPoly BiPoly::translate(const Gauss& a, const Gauss& b) const {
  if (a.is_zero() && b.is_zero()) return *this;
  return compose(x() + BiPoly(a), y() + BiPoly(b));
}

UniPoly BiPoly::at_y(const Gauss& c) const {
  std::vector<Gauss> out(static_cast<std::size_t>(std::max(degree_x(), 0)) + 1);
  for (const auto& [e, v] : t_) out[static_cast<std::size_t>(e.first)] += v * pow(c, static_cast<unsigned>(e.second));
  return UniPoly(std::move(out));
}

UniPoly BiPoly::at_x(const Gauss& c) const {
  std::vector<Gauss> out(static_cast<std::size_t>(std::max(degree_y(), 0)) + 1);
  for (const auto& [e, v] : t_) out[static_cast<std::size_t>(e.second)] += v * pow(c, static_cast<unsigned>(e.first));
  return UniPoly(std::move(out));
}

std::vector<UniPoly> BiPoly::coeffs_in_y() const {
  int dy = degree_y();
  if (dy < 0) return {};
  std::vector<std::vector<Gauss>> raw(static_cast<std::size_t>(dy) + 1);
  for (const auto& [e, c] : t_) {
    auto& row = raw[static_cast<std::size_t>(e.second)];
    if (static_cast<int>(row.size()) <= e.first) row.resize(static_cast<std::size_t>(e.first) + 1);
    row[static_cast<std::size_t>(e.first)] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

BiPoly BiPoly::from_coeffs_in_y(const std::vector<UniPoly>& c) {
  BiPoly out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (int i = 0; i <= c[k].degree(); ++i) {
      const Gauss& v = c[k].coeffs()[static_cast<std::size_t>(i)];
      if (!v.is_zero()) out.t_.emplace(Exponent{i, static_cast<int>(k)}, v);
    }
  }
  return out;
}

BiPoly pow(const BiPoly& p, unsigned e) {
  BiPoly result(1);
  BiPoly b = p;
  while (e > 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return result;
}

std::optional<BiPoly> try_divide(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  BiPoly rem = a;
  BiPoly quo;
  auto [be, bc] = b.lead();
  Gauss binv = bc.inverse();
  while (!rem.is_zero()) {
    auto [re, rc] = rem.lead();
    int i = re.first - be.first;
    int j = re.second - be.second;
    if (i < 0 || j < 0) return std::nullopt;
    BiPoly t = BiPoly::monomial(i, j, rc * binv);
    quo += t;
    rem -= t * b;
  }
  return quo;
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw std::domain_error("inexact polynomial division");
  return *q;
}

std::string to_string(const BiPoly& p, const std::string& vx, const std::string& vy) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c.is_real() && sgn(c.re()) < 0;
    std::string cs = to_string(neg ? -c : c);
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    std::string mono;
    auto add = [&](const std::string& v, int k) {
      if (k == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (k > 1) mono += "^" + std::to_string(k);
    };
    add(vx, e.first);
    add(vy, e.second);
    if (mono.empty()) out += cs;
    else if (cs == "1") out += mono;
    else out += cs + "*" + mono;
  }
  return out;
}

}  // namespace folia
