#include "folia/completeness.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <numeric>

namespace folia {

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::COMPLETE_MODEL: return "COMPLETE_MODEL";
    case VerdictStatus::NOT_COMPLETE: return "NOT_COMPLETE";
    case VerdictStatus::INCONCLUSIVE: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

using Vec = std::pair<Gauss, Gauss>;
using Mat = std::array<Gauss, 4>;  // row major

BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }

/// p(a + t u, b + t v) as a polynomial in t.
UniPoly along(const BiPoly& p, const Vec& at, const Vec& dir) {
  UniPoly lx(std::vector<Gauss>{at.first, dir.first});
  UniPoly ly(std::vector<Gauss>{at.second, dir.second});
  UniPoly out;
  for (const auto& [e, c] : p.terms())
    out += pow(lx, static_cast<unsigned>(e.first)) * pow(ly, static_cast<unsigned>(e.second)) * c;
  return out;
}

/// Linear form vanishing on the direction v.
BiPoly annihilator(const Vec& v) { return X().scaled(v.second) - Y().scaled(v.first); }

int multiplicity_of(BiPoly f, const BiPoly& l) {
  int k = 0;
  while (auto q = try_divide(f, l)) {
    f = *q;
    ++k;
  }
  return k;
}

/// Directions of the lines through the origin on which the homogeneous form c vanishes.
struct Lines {
  std::vector<Vec> dirs;
  int distinct = 0;  // including lines outside Q(i)
};

Lines cone_lines(const BiPoly& c) {
  Lines out;
  UniPoly t = c.at_x(Gauss(1));  // c(1, t)
  RootFactorization rf = rational_roots(t);
  for (const auto& [r, k] : rf.roots) out.dirs.push_back({Gauss(1), r});
  out.distinct = static_cast<int>(rf.roots.size());
  if (rf.residual.degree() > 0) {
    const UniPoly& r = rf.residual;
    out.distinct += exact_div(r, gcd(r, r.derivative())).degree();
  }
  if (t.degree() < c.degree()) {
    out.dirs.push_back({Gauss(0), Gauss(1)});
    ++out.distinct;
  }
  return out;
}

/// M^-1 X(M w).
PolyVectorField linear_pullback(const PolyVectorField& x, const Mat& m) {
  BiPoly nx = X().scaled(m[0]) + Y().scaled(m[1]);
  BiPoly ny = X().scaled(m[2]) + Y().scaled(m[3]);
  BiPoly p = x.p.compose(nx, ny), q = x.q.compose(nx, ny);
  Gauss det = m[0] * m[3] - m[1] * m[2];
  return {(p.scaled(m[3]) - q.scaled(m[1])).scaled(det.inverse()),
          (q.scaled(m[0]) - p.scaled(m[2])).scaled(det.inverse())};
}

/// Constant c with a = c b, if any.
std::optional<Gauss> proportional(const PolyVectorField& a, const PolyVectorField& b) {
  const BiPoly& lead = b.p.is_zero() ? b.q : b.p;
  const BiPoly& other = b.p.is_zero() ? a.q : a.p;
  auto [e, c] = lead.lead();
  Gauss k = other.coeff(e.first, e.second) / c;
  if (k.is_zero() || b.scaled(k) != a) return std::nullopt;
  return k;
}

std::optional<long> as_long(const Gauss& g) {
  if (!g.is_real() || g.re().get_den() != 1 || !g.re().get_num().fits_slong_p()) return std::nullopt;
  return g.re().get_num().get_si();
}

PolyVectorField quadratic_template(int item, unsigned a) {
  BiPoly x = X(), y = Y();
  switch (item) {
    case 5: return PolyVectorField{x * (x - y.scaled(2)), y * (y - x.scaled(2))}.times(pow(x * y * (x - y), a));
    case 6: return PolyVectorField{x * (x - y.scaled(3)), y * (y - x.scaled(3))}.times(pow(x * y * pow(x - y, 2u), a));
    default: return PolyVectorField{x * (x.scaled(2) - y.scaled(5)), y * (y - x.scaled(4))}.times(pow(x * pow(y, 2u) * pow(x - y, 3u), a));
  }
}

/// Items 4 to 7: linear maps sending the three invariant lines to x = 0, y = 0, x = y.
std::optional<TopComponentClass> match_three_lines(const PolyVectorField& xd, const std::vector<Vec>& lines) {
  std::array<int, 3> perm{0, 1, 2};
  int d = xd.degree();
  do {
    const Vec& v1 = lines[perm[0]];  // onto x = 0
    const Vec& v2 = lines[perm[1]];  // onto y = 0
    const Vec& v3 = lines[perm[2]];  // onto x = y
    // alpha v2 + beta v1 = v3
    Gauss det = v2.first * v1.second - v1.first * v2.second;
    Gauss alpha = (v3.first * v1.second - v1.first * v3.second) / det;
    Gauss beta = (v2.first * v3.second - v3.first * v2.second) / det;
    Mat m{alpha * v2.first, beta * v1.first, alpha * v2.second, beta * v1.second};
    PolyVectorField w = linear_pullback(xd, m);
    if (d == 2) {
      Gauss k = w.p.coeff(2, 0);
      if (!k.is_zero() && w.p == BiPoly::monomial(2, 0, k) && w.q.coeff(2, 0).is_zero()) {
        Gauss n = -w.q.coeff(1, 1) / k;
        auto nl = as_long(n);
        BiPoly expect = (X().scaled(-n) * Y() + BiPoly::monomial(0, 2, n + Gauss(1))).scaled(k);
        if (nl && *nl >= 0 && w.q == expect) {
          TopComponentClass c;
          c.item = 4;
          c.n = *nl;
          return c;
        }
      }
    }
    for (auto [item, step] : {std::pair{5, 3}, std::pair{6, 4}, std::pair{7, 6}}) {
      if ((d - 2) % step != 0) continue;
      long a = (d - 2) / step;
      if (proportional(w, quadratic_template(item, static_cast<unsigned>(a)))) {
        TopComponentClass c;
        c.item = item;
        c.a = a;
        return c;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

TopComponentClass unknown(std::string reason, bool decided = true) {
  TopComponentClass c;
  c.decided = decided;
  c.reason = std::move(reason);
  return c;
}

TopComponentClass classify_linear(const BiPoly& f, const PolyVectorField& y) {
  Gauss a = y.p.coeff(1, 0), b = y.p.coeff(0, 1), c = y.q.coeff(1, 0), d = y.q.coeff(0, 1);
  Gauss tr = a + d, det = a * d - b * c;
  // t^2 - tr t + det
  RootFactorization rf = rational_roots(UniPoly(std::vector<Gauss>{det, -tr, Gauss(1)}));
  if (rf.residual.degree() > 0) {
    if (!tr.is_zero()) return unknown("eigenvalue ratio not rational");
    BiPoly cone = (Y() * y.p - X() * y.q).monic();
    int deg = f.degree();
    if (deg % 2 != 0 || f.monic() != pow(cone, static_cast<unsigned>(deg / 2)))
      return unknown("multiplier is not a power of the invariant quadric");
    TopComponentClass r;
    r.item = 3;
    r.m = r.n = 1;
    r.i = r.j = deg / 2;
    return r;
  }
  if (rf.roots.size() < 2)
    return unknown("linear part not diagonalizable with distinct eigenvalues");
  auto eigvec = [&](const Gauss& lam) -> Vec {
    if (!b.is_zero()) return {b, lam - a};
    if (!c.is_zero()) return {lam - d, c};
    if (a == lam) return {Gauss(1), Gauss(0)};
    return {Gauss(0), Gauss(1)};
  };
  std::array<Gauss, 2> lam{rf.roots[0].first, rf.roots[1].first};
  std::array<Vec, 2> vec{eigvec(lam[0]), eigvec(lam[1])};
  if (f.degree() == 1) {
    for (int k = 0; k < 2; ++k) {
      if (!try_divide(f, annihilator(vec[k]))) continue;
      auto n = as_long(lam[k] / lam[1 - k]);
      if (n && *n >= 2) {
        TopComponentClass r;
        r.item = 2;
        r.n = *n;
        return r;
      }
    }
  }
  Gauss ratio = lam[0] / lam[1];
  if (ratio.is_real() && sgn(ratio.re()) < 0) {
    long m = -ratio.re().get_num().get_si();
    long n = ratio.re().get_den().get_si();
    // lam[0] plays m (its eigenline is the x-axis), lam[1] plays -n.
    BiPoly lx = annihilator(vec[1]), ly = annihilator(vec[0]);
    int i = multiplicity_of(f, lx), j = multiplicity_of(f, ly);
    BiPoly rest = exact_div(f, pow(lx, static_cast<unsigned>(i)) * pow(ly, static_cast<unsigned>(j)));
    if (!rest.is_constant()) return unknown("multiplier has factors off the eigenlines");
    long s = m * i - n * j;
    if (s < -1 || s > 1) return unknown("exponents violate the resonance condition");
    TopComponentClass r;
    r.item = 3;
    r.m = m;
    r.n = n;
    r.i = i;
    r.j = j;
    return r;
  }
  return unknown("no linear item matches");
}

}  // namespace

TopComponentClass classify_top_component(const PolyVectorField& x) {
  if (x.degree() < 2) throw AnalysisError("top component needs degree at least 2");
  if (!infinity_invariant(x)) throw AnalysisError("line at infinity is not invariant");
  PolyVectorField xd = x.homogeneous_part(x.degree());
  SaturationResult s = saturate(xd);
  const PolyVectorField& y = s.core;
  int dy = y.degree();
  if (dy == 0) {
    Vec v{y.p.constant_term(), y.q.constant_term()};
    int a = multiplicity_of(s.scalar, annihilator(v));
    if (s.scalar_degree - a >= 3) return unknown("multiplier has degree at least 3 off the invariant line");
    TopComponentClass r;
    r.item = 1;
    r.a = a;
    return r;
  }
  if (dy == 1) return classify_linear(s.scalar, y);
  if (dy == 2) {
    Lines l = cone_lines(Y() * y.p - X() * y.q);
    if (l.distinct != 3) return unknown("quadratic part without three invariant lines");
    if (l.dirs.size() != 3) return unknown("invariant lines outside Q(i)", false);
    if (auto r = match_three_lines(xd, l.dirs)) return *r;
    return unknown("no quadratic item matches");
  }
  return unknown("saturated top component of degree " + std::to_string(dy));
}

std::optional<NormalForm> normal_form_match(const PolyVectorField& x) {
  if (x.q.is_zero() && !x.p.is_zero()) {
    int eps = x.p.val_x();
    if ((eps == 0 || eps == 1) && x.p.degree_x() == eps) {
      NormalForm f;
      f.form = 1;
      f.epsilon = eps;
      f.p = x.p.shifted(-eps, 0).at_x(Gauss(0));
      return f;
    }
  }
  if (x.p.terms().size() == 1 && x.q.terms().size() == 1) {
    auto [ep, cp] = *x.p.terms().begin();
    auto [eq, cq] = *x.q.terms().begin();
    long n = eq.first, m = ep.second;
    if (n >= 1 && m >= 1 && ep.first == n + 1 && eq.second == m + 1 && std::gcd(n, m) == 1) {
      Gauss k = cp / Gauss(m);
      if (cq == -k * Gauss(n)) {
        NormalForm f;
        f.form = 2;
        f.n = n;
        f.m = m;
        f.scale = k;
        return f;
      }
    }
  }
  return std::nullopt;
}

std::optional<LineObstruction> line_obstruction(const PolyVectorField& x, const Vec& point, const Vec& direction) {
  UniPoly px = along(x.p, point, direction), qx = along(x.q, point, direction);
  if (!(px * direction.second - qx * direction.first).is_zero()) return std::nullopt;
  UniPoly f = direction.first.is_zero() ? qx * direction.second.inverse() : px * direction.first.inverse();
  if (f.degree() < 2) return std::nullopt;
  LineObstruction o{"escape", point, direction, f, Gauss(0)};
  for (const auto& [r, k] : rational_roots(f).roots) {
    if (sc_1d_germ(f.shifted(r)).status == ScStatus::NOT_SEMICOMPLETE) {
      o.rule = "obsidiota";
      o.zero = r;
      break;
    }
  }
  return o;
}

std::optional<LineObstruction> invariant_line_escape(const PolyVectorField& x) {
  std::vector<std::pair<Vec, Vec>> lines;
  // p(c, y) = 0 identically, or every vertical line when p vanishes.
  auto axis_lines = [&](const BiPoly& p, const BiPoly& other, bool vertical) {
    BiPoly pv = vertical ? p : p.swapped();
    Vec dir = vertical ? Vec{Gauss(0), Gauss(1)} : Vec{Gauss(1), Gauss(0)};
    auto place = [&](const Gauss& c) { return vertical ? Vec{c, Gauss(0)} : Vec{Gauss(0), c}; };
    if (pv.is_zero()) {
      BiPoly ov = vertical ? other : other.swapped();  // restriction lives in the second variable
      std::vector<UniPoly> cy = ov.coeffs_in_y();
      if (cy.empty()) return;
      for (long c = 0; c < 64; ++c) {
        for (long sgn_c : {c, -c}) {
          if (!cy.back()(Gauss(sgn_c)).is_zero()) {
            lines.push_back({place(Gauss(sgn_c)), dir});
            return;
          }
        }
      }
      return;
    }
    UniPoly g;
    for (const UniPoly& c : pv.coeffs_in_y()) g = gcd(g, c);
    for (const auto& [r, k] : rational_roots(g).roots) lines.push_back({place(r), dir});
  };
  axis_lines(x.p, x.q, true);
  axis_lines(x.q, x.p, false);

  SaturationResult s = saturate(x);
  CommonZeros zs = affine_singularities(x);
  for (const auto& pt : zs.points) {
    PolyVectorField z = s.core.translate(pt.first, pt.second);
    int k = z.order();
    BiPoly cone = Y() * z.p.homogeneous_part(k) - X() * z.q.homogeneous_part(k);
    if (cone.is_zero()) continue;
    for (const Vec& v : cone_lines(cone).dirs) lines.push_back({pt, v});
  }

  std::optional<LineObstruction> escape;
  for (const auto& [pt, dir] : lines) {
    auto o = line_obstruction(x, pt, dir);
    if (!o) continue;
    if (o->rule == "obsidiota") return o;
    if (!escape) escape = o;
  }
  return escape;
}

namespace {

CertificateStep step(std::string rule, std::vector<std::pair<std::string, std::string>> data = {},
                     ChartId chart = ChartId::AFFINE, Vec loc = {Gauss(0), Gauss(0)}) {
  return {std::move(rule), chart, std::move(loc), std::move(data)};
}

std::string vec_text(const Vec& v) { return "(" + to_string(v.first) + ", " + to_string(v.second) + ")"; }

CertificateStep line_step(const LineObstruction& o) {
  std::vector<std::pair<std::string, std::string>> data{
      {"direction", vec_text(o.direction)}, {"restriction", to_string(o.restriction, "t")}};
  if (o.rule == "obsidiota") {
    data.push_back({"zero", to_string(o.zero)});
    data.push_back({"order", std::to_string(o.restriction.shifted(o.zero).order())});
  }
  return step(o.rule, std::move(data), ChartId::AFFINE, o.point);
}

struct PointOutcome {
  bool ok = false;
  std::string error;
  bool dicritical = false;
  bool adapted = false;
  int blowups = 0;
  bool undecided = false;
  /// Every exceptional component is a pole and no zero curve passes through the point,
  /// so any further blow-up again produces a pole.
  bool stable = false;
  std::vector<int> offending;
};

PointOutcome analyze_point(const InfinitySingularity& s, const PipelineOptions& opt) {
  PointOutcome out;
  try {
    ResolutionTree t = seidenberg_resolve(s.germ, opt.max_blowups, true, opt.trunc);
    AdaptedPolesReport a = adapted_poles(t);
    out.ok = true;
    out.dicritical = t.dicritical() || s.hint == DicriticalHint::YES;
    out.adapted = a.adapted;
    out.offending = a.offending_components;
    out.blowups = t.blowups();
    out.undecided = t.linearization_undecided || s.classification.linearization_undecided;
    out.stable = !s.germ.num().constant_term().is_zero() &&
                 std::all_of(t.components.begin(), t.components.end(),
                             [](const DivisorComponent& c) { return c.field_order < 0; });
  } catch (const AnalysisError& e) {
    out.error = e.what();
    out.dicritical = s.hint == DicriticalHint::YES;
  }
  return out;
}

std::vector<PointOutcome> analyze_points(const InfinityScan& scan, const PipelineOptions& opt) {
  std::vector<PointOutcome> out;
  if (!opt.parallel) {
    for (const auto& s : scan.points) out.push_back(analyze_point(s, opt));
    return out;
  }
  std::vector<std::future<PointOutcome>> jobs;
  for (const auto& s : scan.points) jobs.push_back(std::async(std::launch::async, analyze_point, std::cref(s), std::cref(opt)));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int k : v) s += (s.empty() ? "" : ",") + std::to_string(k);
  return s;
}

Verdict finish(Verdict v, VerdictStatus s) {
  v.status = s;
  return v;
}

}  // namespace

Verdict completeness_verdict(const PolyVectorField& x, const PipelineOptions& opt) {
  if (x.is_zero()) throw AnalysisError("zero field");
  Verdict v;
  int d = x.degree();
  if (d <= 1) {
    v.certificate.push_back(step("degree1", {{"degree", std::to_string(d)}}));
    return finish(v, VerdictStatus::COMPLETE_MODEL);
  }
  if (!infinity_invariant(x)) {
    v.certificate.push_back(step("infinity-not-invariant", {{"degree", std::to_string(d)}, {"infinity", "not invariant"}}));
    return finish(v, VerdictStatus::NOT_COMPLETE);
  }
  v.certificate.push_back(step("infinity-invariant", {{"degree", std::to_string(d)}}));

  if (auto o = invariant_line_escape(x)) {
    v.certificate.push_back(line_step(*o));
    return finish(v, VerdictStatus::NOT_COMPLETE);
  }

  TopComponentClass top = classify_top_component(x);
  std::vector<std::pair<std::string, std::string>> td{{"item", std::to_string(top.item)}};
  if (top.item == 0) {
    td.push_back({"reason", top.reason});
    if (top.decided) {
      v.certificate.push_back(step("top-component-excluded", std::move(td)));
      return finish(v, VerdictStatus::NOT_COMPLETE);
    }
    td.push_back({"decided", "false"});
  } else {
    for (auto [k, val] : {std::pair{"a", top.a}, {"n", top.n}, {"m", top.m}, {"i", top.i}, {"j", top.j}})
      td.push_back({k, std::to_string(val)});
  }
  v.certificate.push_back(step("top-component", std::move(td)));

  InfinityScan scan = singularities_at_infinity(x, opt.trunc);
  int count = static_cast<int>(scan.points.size());
  if (count > 3) {
    v.certificate.push_back(step("too-many-points-at-infinity", {{"points", std::to_string(count)}}));
    return finish(v, VerdictStatus::NOT_COMPLETE);
  }
  if (!scan.complete)
    v.certificate.push_back(step("infinity-unresolved", {{"factor", scan.unresolved}}));

  std::vector<PointOutcome> outcomes = analyze_points(scan, opt);
  bool dicritical = false, all_adapted = scan.complete, failed = !scan.complete;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    const InfinitySingularity& s = scan.points[k];
    const PointOutcome& o = outcomes[k];
    std::vector<std::pair<std::string, std::string>> data{{"type", to_string(s.classification.type)},
                                                          {"hint", to_string(s.hint)}};
    if (o.ok) {
      data.push_back({"blowups", std::to_string(o.blowups)});
      data.push_back({"dicritical", o.dicritical ? "true" : "false"});
      data.push_back({"adapted", o.adapted ? "true" : "false"});
      data.push_back({"stable", o.stable ? "true" : "false"});
      if (!o.offending.empty()) data.push_back({"offending", join(o.offending)});
      if (o.undecided) data.push_back({"linearization", "undecided"});
    } else {
      data.push_back({"error", o.error});
    }
    v.certificate.push_back(step(o.dicritical ? "dicritical" : "resolution", std::move(data), s.chart, s.location));
    dicritical = dicritical || o.dicritical;
    failed = failed || !o.ok || o.undecided;
    all_adapted = all_adapted && o.ok && o.adapted && o.stable;
  }

  if (dicritical) {
    if (auto f = normal_form_match(x)) {
      v.theorem_a_form = f;
      std::vector<std::pair<std::string, std::string>> data{{"form", std::to_string(f->form)}};
      if (f->form == 1) {
        data.push_back({"epsilon", std::to_string(f->epsilon)});
        data.push_back({"P", to_string(f->p, "y")});
      } else {
        data.push_back({"n", std::to_string(f->n)});
        data.push_back({"m", std::to_string(f->m)});
      }
      v.certificate.push_back(step("normal-form", std::move(data)));
      return finish(v, VerdictStatus::COMPLETE_MODEL);
    }
    v.certificate.push_back(step("normal-form", {{"match", "none"}}));
    return finish(v, VerdictStatus::INCONCLUSIVE);
  }
  if (!failed && all_adapted) {
    v.certificate.push_back(step("adapted-poles-no-dicritical", {{"points", std::to_string(count)}, {"adapted", "true"}, {"dicritical", "false"}}));
    return finish(v, VerdictStatus::NOT_COMPLETE);
  }
  v.certificate.push_back(step("undecided", {{"adapted", all_adapted ? "true" : "false"}, {"complete", failed ? "false" : "true"}}));
  return finish(v, VerdictStatus::INCONCLUSIVE);
}

namespace {

Vec parse_vec(const std::string& s) {
  auto comma = s.find(", ");
  if (s.size() < 2 || comma == std::string::npos) throw AnalysisError("malformed direction " + s);
  return {parse_gauss(s.substr(1, comma - 1)), parse_gauss(s.substr(comma + 2, s.size() - comma - 3))};
}

std::optional<std::string> lookup(const CertificateStep& s, const std::string& key) {
  for (const auto& [k, v] : s.data)
    if (k == key) return v;
  return std::nullopt;
}

}  // namespace

bool replay_certificate(const PolyVectorField& x, const Verdict& v, const PipelineOptions& opt) {
  if (v.status != VerdictStatus::NOT_COMPLETE || v.certificate.empty()) return false;
  const CertificateStep& last = v.certificate.back();
  try {
    if (last.rule == "infinity-not-invariant") return x.degree() >= 2 && !infinity_invariant(x);
    if (last.rule == "escape" || last.rule == "obsidiota") {
      auto dir = lookup(last, "direction");
      if (!dir) return false;
      auto o = line_obstruction(x, last.location, parse_vec(*dir));
      return o && o->rule == last.rule;
    }
    if (last.rule == "top-component-excluded") {
      TopComponentClass c = classify_top_component(x);
      return c.item == 0 && c.decided;
    }
    if (last.rule == "too-many-points-at-infinity") return singularities_at_infinity(x, opt.trunc).points.size() > 3;
    if (last.rule == "adapted-poles-no-dicritical") {
      InfinityScan scan = singularities_at_infinity(x, opt.trunc);
      if (!scan.complete) return false;
      for (const auto& s : scan.points) {
        PointOutcome o = analyze_point(s, opt);
        if (!o.ok || o.undecided || o.dicritical || !o.adapted || !o.stable) return false;
      }
      return true;
    }
  } catch (const AnalysisError&) {
    return false;
  }
  return false;
}

}  // namespace folia
