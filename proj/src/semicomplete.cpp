#include "folia/semicomplete.hpp"

#include <algorithm>
#include <numeric>

#include "folia/conservation.hpp"

namespace folia {

std::string to_string(ScStatus s) {
  switch (s) {
    case ScStatus::SEMICOMPLETE: return "SEMICOMPLETE";
    case ScStatus::NOT_SEMICOMPLETE: return "NOT_SEMICOMPLETE";
    case ScStatus::CONDITIONAL: return "CONDITIONAL";
    case ScStatus::UNKNOWN: return "UNKNOWN";
  }
  return "?";
}

std::string to_string(SelanoForm f) {
  switch (f) {
    case SelanoForm::FORM1: return "FORM1";
    case SelanoForm::FORM2: return "FORM2";
    case SelanoForm::FORM3_CONDITIONAL: return "FORM3_CONDITIONAL";
    case SelanoForm::NONE: return "NONE";
  }
  return "?";
}

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::NONE: return "NONE";
    case ModelKind::Z_1_11: return "Z_1_11";
    case ModelKind::Z_0_12: return "Z_0_12";
    case ModelKind::Z_1_00: return "Z_1_00";
  }
  return "?";
}

namespace {

BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }

bool is_monomial(const BiPoly& p) { return p.terms().size() == 1; }
bool is_homogeneous(const BiPoly& p) { return !p.is_zero() && p.order() == p.degree(); }
bool unit_at_origin(const BiPoly& p) { return !p.constant_term().is_zero(); }

ScVerdict verdict(ScStatus s, std::string rule, std::string reason) { return {s, std::move(rule), std::move(reason)}; }

/// Eigenvector of the core's linear part for lam.
std::pair<Gauss, Gauss> eigenvector(const PolyVectorField& z, const Gauss& lam) {
  Gauss a = z.p.coeff(1, 0), b = z.p.coeff(0, 1), c = z.q.coeff(1, 0), d = z.q.coeff(0, 1);
  if (!b.is_zero()) return {b, lam - a};
  if (!c.is_zero()) return {lam - d, c};
  if (a == lam) return {Gauss(1), Gauss(0)};
  return {Gauss(0), Gauss(1)};
}

/// The tangent line of h at the origin annihilates v.
bool tangent_to(const BiPoly& h, const std::pair<Gauss, Gauss>& v) {
  return (h.coeff(1, 0) * v.first + h.coeff(0, 1) * v.second).is_zero();
}

/// The invariant factor of h, which carries its branch through the origin when that branch is invariant.
BiPoly invariant_part(const BiPoly& h, const PolyVectorField& z) {
  BiPoly lie = z.p * h.dx() + z.q * h.dy();
  if (lie.is_zero()) return h;
  return gcd(h, lie);
}

bool branch_invariant(const BiPoly& h, const PolyVectorField& z) {
  return invariant_part(h, z).constant_term().is_zero();
}

/// Witness for {h = 0} when h is linear in one variable with constant coefficient.
std::optional<CurveWitness> witness_for(const BiPoly& h) {
  if (h.degree_y() == 1) {
    std::vector<UniPoly> cy = h.coeffs_in_y();
    if (cy[1].degree() == 0) {
      UniPoly u = -(cy[0] * UniPoly(cy[1].coeff(0).inverse()));
      return CurveWitness::graph(u);
    }
  }
  BiPoly s = h.swapped();
  if (s.degree_y() == 1) {
    std::vector<UniPoly> cx = s.coeffs_in_y();
    if (cx[1].degree() == 0) {
      // x = u(y); (x, y) -> (u(x) + y, x) carries {y = 0} onto it
      BiPoly u = BiPoly::from_uni(-(cx[0] * UniPoly(cx[1].coeff(0).inverse())));
      return CurveWitness{X() - u.swapped(), u + Y(), X()};
    }
  }
  return std::nullopt;
}

}  // namespace

ScVerdict sc_1d_germ(const UniPoly& f, int shift) {
  if (f.is_zero()) throw AnalysisError("zero one-dimensional germ");
  int ord = f.order() + shift;
  if (ord < 0) return verdict(ScStatus::NOT_SEMICOMPLETE, "obsidiota", "strictly meromorphic");
  if (ord >= 3) return verdict(ScStatus::NOT_SEMICOMPLETE, "obsidiota", "vanishes to order " + std::to_string(ord));
  return verdict(ScStatus::SEMICOMPLETE, "obsidiota", "order " + std::to_string(ord));
}

TimeformResidues timeform_residues(const MeroField& germ, const CurveWitness& line) {
  MeroField s = straighten(germ, line);
  if (s.divisor_order(Y()) != 0) throw AnalysisError("field has a zero or pole along the curve");
  UniPoly zeros = s.num().at_y(Gauss(0)) * s.core().p.at_y(Gauss(0));
  UniPoly poles = s.den().at_y(Gauss(0));
  if (zeros.is_zero()) throw AnalysisError("field vanishes along the curve");
  UniPoly common = gcd(zeros, poles);
  zeros = exact_div(zeros, common);
  poles = exact_div(poles, common);
  TimeformResidues out;
  RootFactorization zr = rational_roots(zeros);
  RootFactorization pr = rational_roots(poles);
  if (zr.residual.degree() > 0) throw AnalysisError("restriction has a zero outside Q(i): " + to_string(zr.residual));
  if (pr.residual.degree() > 0) throw AnalysisError("restriction has a pole outside Q(i): " + to_string(pr.residual));
  // dT = poles/zeros dx
  for (const auto& [r, k] : zr.roots) {
    UniPoly num = poles.shifted(r);
    UniPoly den = zeros.shifted(r);
    UniPoly unit(std::vector<Gauss>(den.coeffs().begin() + k, den.coeffs().end()));
    out.residues.push_back({r, (num * series_inverse(unit, k)).coeff(k - 1)});
  }
  for (const auto& [r, k] : pr.roots) out.residues.push_back({r, Gauss(0)});
  std::sort(out.residues.begin(), out.residues.end(),
            [](const Residue& a, const Residue& b) { return lex_less(a.point, b.point); });

  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < out.residues.size(); ++i) {
    if (!out.residues[i].value.is_zero()) nonzero.push_back(i);
  }
  if (nonzero.size() > 16) throw AnalysisError("too many residues to enumerate subsets");
  for (unsigned mask = 1; mask < (1U << nonzero.size()); ++mask) {
    Gauss sum(0);
    std::vector<std::size_t> idx;
    for (std::size_t b = 0; b < nonzero.size(); ++b) {
      if (mask & (1U << b)) {
        sum += out.residues[nonzero[b]].value;
        idx.push_back(nonzero[b]);
      }
    }
    if (sum.is_zero()) out.zero_sum_subsets.push_back(std::move(idx));
  }
  return out;
}

ScVerdict check_le31(const BiPoly& num, const BiPoly& den, long m, long n) {
  if (m <= 0 || n <= 0) throw std::invalid_argument("m and n must be positive");
  if (!is_homogeneous(num) || !is_homogeneous(den)) throw AnalysisError("P is not a homogeneous rational function");
  long g = std::gcd(m, n);
  m /= g;
  n /= g;
  BiPoly c = gcd(num, den);
  BiPoly a = exact_div(num, c), b = exact_div(den, c);
  if (is_monomial(a) && is_monomial(b)) {
    long cx = a.lead().first.first - b.lead().first.first;
    long dy = a.lead().first.second - b.lead().first.second;
    long v = m * cx - n * dy;
    std::string what = "P = x^" + std::to_string(cx) + " y^" + std::to_string(dy) + ", mc - nd = " + std::to_string(v);
    if (v >= -1 && v <= 1) return verdict(ScStatus::UNKNOWN, "le3.1", what);
    return verdict(ScStatus::NOT_SEMICOMPLETE, "le3.1", what);
  }
  if (m == 1 && n == 1 && is_monomial(b)) {
    // (x - y)(xy)^k up to a constant
    BiPoly r = a.shifted(-a.val_x(), -a.val_y());
    long ex = a.val_x() - b.lead().first.first;
    long ey = a.val_y() - b.lead().first.second;
    if (ex == ey && r.monic() == (X() - Y()).monic()) {
      return verdict(ScStatus::UNKNOWN, "le3.1", "P = (x - y)(xy)^" + std::to_string(ex));
    }
  }
  return verdict(ScStatus::NOT_SEMICOMPLETE, "le3.1", "P is neither an admissible monomial nor (x - y)(xy)^a");
}

ScVerdict check_le32(const MeroField& germ) {
  EigenData e = eigen_data(germ);
  if (e.ratio_class != RatioClass::IRRATIONAL_OR_NONREAL) {
    return verdict(ScStatus::UNKNOWN, "le3.2", "eigenvalue ratio is rational or degenerate");
  }
  if (unit_at_origin(germ.num()) && unit_at_origin(germ.den())) {
    return verdict(ScStatus::UNKNOWN, "le3.2", "holomorphic with an isolated zero");
  }
  Gauss s = e.trace * e.trace / e.det - Gauss(2);
  if (s.is_real() && s.re() >= 2) {
    return verdict(ScStatus::NOT_SEMICOMPLETE, "le3.2", "positive irrational eigenvalue ratio");
  }
  return verdict(ScStatus::NOT_SEMICOMPLETE, "le3.1", "eigenvalue ratio neither positive nor rational");
}

ScVerdict check_le33(const MeroField& germ) {
  Classification c = classify_singularity(germ);
  const EigenData& e = c.eigen;
  bool resonant = c.type == SingularityType::SIMPLE_HYPERBOLIC && e.ratio_class == RatioClass::RATIONAL_RATIO &&
                  e.q == 1 && e.p >= 2 && !c.linearization_undecided;
  if (c.type != SingularityType::LJ && !resonant) return verdict(ScStatus::UNKNOWN, "le3.3", "not a resonant node");
  if (unit_at_origin(germ.num()) && unit_at_origin(germ.den())) {
    return verdict(ScStatus::UNKNOWN, "le3.3", "holomorphic with an isolated zero");
  }
  if (resonant) {
    return verdict(ScStatus::NOT_SEMICOMPLETE, "le3.3", "resonant node of ratio " + std::to_string(e.p));
  }
  auto v = eigenvector(germ.core(), e.trace / Gauss(2));
  const BiPoly& g = germ.den();
  const BiPoly& f = germ.num();
  if (g.order() != 1 || !tangent_to(g, v) || !branch_invariant(squarefree_part(g), germ.core())) {
    return verdict(ScStatus::NOT_SEMICOMPLETE, "le3.3", "pole divisor is not a simple pole along the separatrix");
  }
  if (f.order() != 1 || tangent_to(f, v)) {
    return verdict(ScStatus::NOT_SEMICOMPLETE, "le3.3", "zero divisor is not a smooth curve transverse to the separatrix");
  }
  return verdict(ScStatus::UNKNOWN, "le3.3", "simple pole on the separatrix, transverse smooth zero");
}

SaddleNodeData classify_saddle_node(const MeroField& germ) {
  Classification c = classify_singularity(germ);
  if (c.type != SingularityType::SADDLE_NODE) throw AnalysisError("not a saddle-node");
  SaddleNodeData out;
  out.p = *milnor_number(germ) - 1;
  out.strong_direction = eigenvector(germ.core(), c.eigen.trace);
  auto none = [&](const std::string& why) {
    out.form = SelanoForm::NONE;
    out.verdict = verdict(ScStatus::NOT_SEMICOMPLETE, "selano", why);
    return out;
  };
  if (!unit_at_origin(germ.num())) return none("zero divisor through the saddle-node");
  if (!unit_at_origin(germ.den())) {
    BiPoly h = squarefree_part(germ.den());
    if (h.order() != 1 || !tangent_to(h, out.strong_direction) || !branch_invariant(h, germ.core())) {
      return none("pole divisor not contained in the strong invariant manifold");
    }
    out.k = germ.den().order();
    out.strong_manifold = witness_for(invariant_part(h, germ.core()));
  }
  if (out.k == 0 && out.p == 1) {
    out.form = SelanoForm::FORM1;
    out.verdict = verdict(ScStatus::UNKNOWN, "selano.1", "holomorphic saddle-node with p = 1");
  } else if (out.k == out.p) {
    out.form = SelanoForm::FORM2;
    out.verdict = verdict(ScStatus::UNKNOWN, "selano.2", "pole order k = p = " + std::to_string(out.p));
  } else if (out.k == out.p - 1) {
    out.form = SelanoForm::FORM3_CONDITIONAL;
    out.verdict = verdict(ScStatus::CONDITIONAL, "selano.3", "k = p - 1; needs trivial monodromy");
  } else {
    return none("pole order " + std::to_string(out.k) + " fits no normal form for p = " + std::to_string(out.p));
  }
  return out;
}

std::string ModelTag::tag() const {
  if (kind == ModelKind::NONE) return "NONE";
  if (level == 0) return to_string(kind);
  return "TOWER(" + to_string(kind) + ", " + std::to_string(level) + ")";
}

std::string ModelTag::rule() const {
  if (kind == ModelKind::NONE) return "";
  if (level > 0) return "tower." + std::to_string(level);
  switch (kind) {
    case ModelKind::Z_1_11: return "prop4.2.Z111";
    case ModelKind::Z_0_12: return "prop4.2.Z012";
    default: return "prop4.2.Z100";
  }
}

namespace {

ModelTag no_model(ModelTag t, std::string why) {
  t.kind = ModelKind::NONE;
  t.level = 0;
  t.reason = std::move(why);
  return t;
}

bool strong_saddle_node(const ModelPoint& p) {
  return p.type == SingularityType::SADDLE_NODE;
}

/// transverse / along, when both are nonzero.
std::optional<Gauss> ratio(const ModelPoint& p) {
  if (p.along.is_zero() || p.transverse.is_zero() || p.type == SingularityType::LJ) return std::nullopt;
  return p.transverse / p.along;
}

bool has_ratio(const ModelPoint& p, const Gauss& r) {
  auto q = ratio(p);
  return q && *q == r;
}

ModelTag recognize(const MeroField& germ, int depth, int max_level, int trunc) {
  ModelTag out;
  if (germ.foliation_order() == 0) return no_model(out, "regular point");
  if (eigen_data(germ).ratio_class != RatioClass::BOTH_ZERO) return no_model(out, "eigenvalues not both zero");
  const BiPoly& den = germ.den();
  if (!unit_at_origin(den.shifted(-den.val_x(), -den.val_y()))) throw AnalysisError("poles off the coordinate axes");
  BlowupResult b = blow_up(germ, false, trunc);
  if (b.dicritical) throw AnalysisError("dicritical germ");
  if (!b.complete) throw AnalysisError("divisor point outside Q(i): " + b.unresolved);
  out.divisor_order = b.exceptional_order;

  std::vector<const DivisorSingularity*> nested;
  for (const auto& d : b.divisor_singularities) {
    ModelPoint p;
    p.chart = d.chart;
    p.location = d.location;
    p.type = d.classification.type;
    const PolyVectorField& z = d.germ.core();
    bool xt = d.chart == BlowupChart::XT;
    p.transverse = xt ? z.p.coeff(1, 0) : z.q.coeff(0, 1);
    p.along = xt ? z.q.coeff(0, 1) : z.p.coeff(1, 0);
    if (xt && d.location.second.is_zero() && z.q.at_y(Gauss(0)).is_zero()) {
      p.transverse_order = b.chart_xt.divisor_order(Y());
    } else if (!xt && z.p.at_x(Gauss(0)).is_zero()) {
      p.transverse_order = b.chart_sy.divisor_order(X());
    }
    if (!is_simple(p.type)) nested.push_back(&d);
    out.points.push_back(p);
  }

  if (nested.empty()) {
    if (germ.foliation_order() != 2) return no_model(out, "order is not 2");
    if (out.points.size() != 3) return no_model(out, "expected three divisor singularities");
    std::vector<ModelPoint> lj, sn, rest;
    for (const auto& p : out.points) {
      if (p.type == SingularityType::LJ) lj.push_back(p);
      else if (strong_saddle_node(p)) sn.push_back(p);
      else rest.push_back(p);
    }
    bool unit_f = unit_at_origin(germ.num());
    int pole_degree = germ.den().order();
    if (lj.size() == 1 && rest.size() == 2) {
      for (const auto& p : rest) {
        if (!has_ratio(p, Gauss(-1)) || p.transverse_order != -1) return no_model(out, "LJ roster with wrong saddles");
      }
      if (out.divisor_order != -1) return no_model(out, "divisor pole order is not 1");
      out.kind = ModelKind::Z_1_11;
      out.d = 1;
      out.s1_pole = 1;
      return out;
    }
    if (sn.size() == 1 && rest.size() == 2) {
      int d = -rest[0].transverse_order;
      for (const auto& p : rest) {
        if (!has_ratio(p, Gauss(Rat(-1, 2))) || p.transverse_order != -d) return no_model(out, "wrong -1:2 saddles");
      }
      if (d < 1 || out.divisor_order != -(2 * d - 1)) return no_model(out, "divisor pole order is not 2d - 1");
      if (!unit_f || pole_degree != 2 * d) return no_model(out, "extra zero or pole components");
      out.kind = ModelKind::Z_0_12;
      out.d = d;
      out.s1_pole = d;
      return out;
    }
    if (sn.size() == 2 && rest.size() == 1) {
      int d = -rest[0].transverse_order;
      if (!has_ratio(rest[0], Gauss(-1))) return no_model(out, "saddle is not -1:1");
      if (d < 1 || out.divisor_order != -(d - 1)) return no_model(out, "divisor pole order is not d - 1");
      if (!unit_f || pole_degree != d) return no_model(out, "extra zero or pole components");
      out.kind = ModelKind::Z_1_00;
      out.d = d;
      out.s1_pole = d;
      return out;
    }
    return no_model(out, "divisor roster matches no model");
  }

  if (nested.size() != 1) return no_model(out, "more than one non-simple point on the divisor");
  if (depth >= max_level) return no_model(out, "tower deeper than the limit");
  ModelTag inner;
  try {
    inner = recognize(nested[0]->germ, depth + 1, max_level, trunc);
  } catch (const AnalysisError& e) {
    return no_model(out, std::string("non-simple point: ") + e.what());
  }
  if (inner.kind == ModelKind::NONE) return no_model(out, "non-simple point is not a model: " + inner.reason);
  for (auto& p : out.points) {
    if (p.chart == nested[0]->chart && p.location == nested[0]->location) p.nested_level = inner.level;
  }
  Gauss ind = index_along(nested[0]->germ, divisor_witness(*nested[0]), trunc);
  std::vector<ModelPoint> others;
  for (const auto& p : out.points) {
    if (p.nested_level < 0) others.push_back(p);
  }
  int d = inner.d;
  int s1 = inner.s1_pole;
  if (out.divisor_order != -s1) return no_model(out, "divisor pole order differs from the nested model");
  bool first_012 = inner.kind == ModelKind::Z_0_12 && inner.level == 0;
  if (first_012) {
    if (ind != Gauss(-1) || !others.empty()) return no_model(out, "Z_0_12 must sit alone on a strong separatrix");
  } else {
    if (!ind.is_zero()) return no_model(out, "divisor is not an index-zero separatrix of the nested model");
    int expect = inner.kind == ModelKind::Z_1_11 ? -1 : -(s1 + 1);
    if (others.size() != 1 || !has_ratio(others[0], Gauss(-1)) || others[0].transverse_order != expect) {
      return no_model(out, "companion saddle does not match");
    }
  }
  int order = first_012 ? 1 : 2;
  if ((inner.level == 0 || inner.kind == ModelKind::Z_1_11) && germ.foliation_order() != order) {
    return no_model(out, "collapsed order does not match the tower");
  }
  out.kind = inner.kind;
  out.level = inner.level + 1;
  out.d = d;
  out.s1_pole = first_012 ? s1 : -others[0].transverse_order;
  return out;
}

}  // namespace

ModelTag recognize_model(const MeroField& germ, int max_level, int trunc) {
  return recognize(germ, 0, max_level, trunc);
}

}  // namespace folia
