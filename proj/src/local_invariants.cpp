#include "folia/local_invariants.hpp"

namespace folia {

std::string to_string(RatioClass c) {
  switch (c) {
    case RatioClass::BOTH_ZERO: return "BOTH_ZERO";
    case RatioClass::SADDLE_NODE: return "SADDLE_NODE";
    case RatioClass::RATIONAL_RATIO: return "RATIONAL_RATIO";
    case RatioClass::IRRATIONAL_OR_NONREAL: return "IRRATIONAL_OR_NONREAL";
  }
  return "?";
}

std::string to_string(SingularityType t) {
  switch (t) {
    case SingularityType::REGULAR: return "REGULAR";
    case SingularityType::SIMPLE_HYPERBOLIC: return "SIMPLE_HYPERBOLIC";
    case SingularityType::SADDLE_NODE: return "SADDLE_NODE";
    case SingularityType::LJ: return "LJ";
    case SingularityType::NILPOTENT: return "NILPOTENT";
    case SingularityType::ZERO_LINEAR_PART: return "ZERO_LINEAR_PART";
    case SingularityType::DICRITICAL_LINEARIZABLE: return "DICRITICAL_LINEARIZABLE";
  }
  return "?";
}

bool is_simple(SingularityType t) {
  return t != SingularityType::NILPOTENT && t != SingularityType::ZERO_LINEAR_PART;
}

namespace {

struct Linear {
  Gauss a, b, c, d;  // [[a, b], [c, d]] acting on (x, y)
};

Linear linear_part(const PolyVectorField& z) {
  return {z.p.coeff(1, 0), z.p.coeff(0, 1), z.q.coeff(1, 0), z.q.coeff(0, 1)};
}

std::optional<Rat> as_rational(const Gauss& g) {
  if (!g.is_real()) return std::nullopt;
  return g.re();
}

}  // namespace

EigenData eigen_data(const MeroField& germ) {
  const PolyVectorField& z = germ.core();
  if (!z.p.constant_term().is_zero() || !z.q.constant_term().is_zero()) {
    throw AnalysisError("not singular");
  }
  Linear L = linear_part(z);
  EigenData e;
  e.trace = L.a + L.d;
  e.det = L.a * L.d - L.b * L.c;
  bool scalar = L.b.is_zero() && L.c.is_zero() && L.a == L.d;
  if (e.det.is_zero()) {
    e.lambda1 = Gauss(0);
    e.lambda2 = e.trace;
    if (e.trace.is_zero()) {
      e.ratio_class = RatioClass::BOTH_ZERO;
      e.jordan_nontrivial = !scalar;
    } else {
      e.ratio_class = RatioClass::SADDLE_NODE;
    }
    return e;
  }
  Gauss disc = e.trace * e.trace - Gauss(4) * e.det;
  if (disc.is_zero()) {
    e.ratio_class = RatioClass::RATIONAL_RATIO;
    e.p = 1;
    e.q = 1;
    e.lambda1 = e.lambda2 = e.trace / Gauss(2);
    e.jordan_nontrivial = !scalar;
    return e;
  }
  if (auto sd = gauss_sqrt(disc)) {
    Gauss l1 = (e.trace - *sd) / Gauss(2);
    Gauss l2 = (e.trace + *sd) / Gauss(2);
    if (l1.norm() > l2.norm() || (l1.norm() == l2.norm() && lex_less(l2, l1))) std::swap(l1, l2);
    e.lambda1 = l1;
    e.lambda2 = l2;
  }
  // r + 1/r = s for the eigenvalue ratio r
  Gauss s = e.trace * e.trace / e.det - Gauss(2);
  auto root = gauss_sqrt(s * s - Gauss(4));
  if (!root) {
    e.ratio_class = RatioClass::IRRATIONAL_OR_NONREAL;
    return e;
  }
  Gauss r1 = (s + *root) / Gauss(2);
  Gauss r2 = (s - *root) / Gauss(2);
  Gauss r = r1.norm() >= r2.norm() ? r1 : r2;
  auto rr = as_rational(r);
  if (!rr) {
    e.ratio_class = RatioClass::IRRATIONAL_OR_NONREAL;
    return e;
  }
  e.ratio_class = RatioClass::RATIONAL_RATIO;
  e.p = rr->get_num().get_si();
  e.q = rr->get_den().get_si();
  if (!e.lambda1 && *rr != -1) {
    e.lambda1 = e.trace / (Gauss(1) + r);
    e.lambda2 = *e.lambda1 * r;
  }
  return e;
}

namespace {

/// Eigenvector of L for the eigenvalue lam.
std::pair<Gauss, Gauss> eigenvector(const Linear& L, const Gauss& lam) {
  if (!L.b.is_zero()) return {L.b, lam - L.a};
  if (!L.c.is_zero()) return {lam - L.d, L.c};
  if (L.a == lam) return {Gauss(1), Gauss(0)};
  return {Gauss(0), Gauss(1)};
}


/// Obstruction to a node with integer eigenvalue ratio n >= 2 being linearizable:
/// the x^n coefficient left over when solving for an invariant curve y = h(x)
/// tangent to the weak eigendirection.  It vanishes exactly when the resonant
/// term x^n d/dy of the normal form does.
Gauss resonant_coefficient(const PolyVectorField& z, const Gauss& l1, const Gauss& l2, int n) {
  Linear L = linear_part(z);
  auto [v11, v12] = eigenvector(L, l1);
  auto [v21, v22] = eigenvector(L, l2);
  Gauss dt = v11 * v22 - v21 * v12;
  BiPoly X = BiPoly::x().scaled(v11) + BiPoly::y().scaled(v21);
  BiPoly Y = BiPoly::x().scaled(v12) + BiPoly::y().scaled(v22);
  BiPoly P = z.p.compose_truncated(X, Y, n);
  BiPoly Q = z.q.compose_truncated(X, Y, n);
  Gauss s = (dt * l1).inverse();
  // linear part x d/dx + n y d/dy
  BiPoly Wp = (P.scaled(v22) - Q.scaled(v21)).scaled(s);
  BiPoly Wq = (Q.scaled(v11) - P.scaled(v12)).scaled(s);
  BiPoly h;
  auto defect = [&](int k) {
    BiPoly hx = h;
    BiPoly e = Wq.compose_truncated(BiPoly::x(), hx, k) - mul_truncated(h.dx(), Wp.compose_truncated(BiPoly::x(), hx, k), k);
    return e.coeff(k, 0);
  };
  for (int k = 2; k < n; ++k) {
    Gauss c = defect(k);
    if (!c.is_zero()) h += BiPoly::monomial(k, 0, c / Gauss(k - n));
  }
  return defect(n);
}

}  // namespace

Classification classify_singularity(const MeroField& germ, int trunc) {
  Classification out;
  const PolyVectorField& z = germ.core();
  if (!z.p.constant_term().is_zero() || !z.q.constant_term().is_zero()) return out;
  out.eigen = eigen_data(germ);
  const EigenData& e = out.eigen;
  Linear L = linear_part(z);
  if (L.a.is_zero() && L.b.is_zero() && L.c.is_zero() && L.d.is_zero()) {
    out.type = SingularityType::ZERO_LINEAR_PART;
    return out;
  }
  switch (e.ratio_class) {
    case RatioClass::BOTH_ZERO: out.type = SingularityType::NILPOTENT; return out;
    case RatioClass::SADDLE_NODE: out.type = SingularityType::SADDLE_NODE; return out;
    case RatioClass::IRRATIONAL_OR_NONREAL: out.type = SingularityType::SIMPLE_HYPERBOLIC; return out;
    case RatioClass::RATIONAL_RATIO: break;
  }
  if (e.jordan_nontrivial) {
    out.type = SingularityType::LJ;
    return out;
  }
  out.type = SingularityType::SIMPLE_HYPERBOLIC;
  if (e.p <= 0) return out;
  if (e.q != 1 || e.p == 1) {
    // non-resonant node, or diagonalizable with equal eigenvalues
    out.type = SingularityType::DICRITICAL_LINEARIZABLE;
    return out;
  }
  if (e.p > trunc) {
    out.linearization_undecided = true;
    return out;
  }
  if (resonant_coefficient(z, *e.lambda1, *e.lambda2, static_cast<int>(e.p)).is_zero()) {
    out.type = SingularityType::DICRITICAL_LINEARIZABLE;
  }
  return out;
}

CurveWitness CurveWitness::y_axis_zero() { return {BiPoly::y(), BiPoly::x(), BiPoly::y()}; }

CurveWitness CurveWitness::x_axis_zero() { return {BiPoly::x(), BiPoly::y(), BiPoly::x()}; }

CurveWitness CurveWitness::line(const Gauss& a, const Gauss& b) {
  BiPoly curve = BiPoly::x().scaled(a) + BiPoly::y().scaled(b);
  if (b.is_zero()) {
    if (a.is_zero()) throw std::invalid_argument("degenerate line");
    return {curve, BiPoly::y(), BiPoly::x()};
  }
  return {curve, BiPoly::x(), BiPoly::y() - BiPoly::x().scaled(a / b)};
}

CurveWitness CurveWitness::graph(const UniPoly& h) {
  if (!h.coeff(0).is_zero()) throw std::invalid_argument("graph does not pass through the origin");
  BiPoly hx = BiPoly::from_uni(h);
  return {BiPoly::y() - hx, BiPoly::x(), BiPoly::y() + hx};
}

MeroField straighten(const MeroField& germ, const CurveWitness& w) {
  if (!w.curve.constant_term().is_zero()) throw AnalysisError("curve does not pass through the origin");
  BiPoly pulled = w.curve.compose(w.map_x, w.map_y);
  if (pulled.terms().size() != 1 || pulled.terms().begin()->first != Exponent{0, 1}) {
    throw AnalysisError("witness map does not straighten the curve");
  }
  MeroField s;
  if (w.map_x == BiPoly::x() && w.map_y == BiPoly::y()) {
    s = germ;
  } else if (w.map_x == BiPoly::y() && w.map_y == BiPoly::x()) {
    s = germ.swapped();
  } else {
    s = MeroField::from_rational(germ.chart(), pullback(germ.as_rational(), RatFunc(w.map_x), RatFunc(w.map_y)));
  }
  if (!s.core().q.at_y(Gauss(0)).is_zero()) throw AnalysisError("curve is not invariant");
  return s;
}

int multiplicity_along(const MeroField& germ, const CurveWitness& w) {
  return straighten(germ, w).core().p.at_y(Gauss(0)).order();
}

namespace {

Gauss residue_on_axis(const MeroField& s, int trunc) {
  UniPoly P0 = s.core().p.at_y(Gauss(0));
  UniPoly Qy = s.core().q.dy().at_y(Gauss(0));
  int k = P0.order();
  if (k == 0) return Gauss(0);
  if (k > trunc) throw AnalysisError("increase truncation");
  UniPoly unit(std::vector<Gauss>(P0.coeffs().begin() + k, P0.coeffs().end()));
  return (Qy * series_inverse(unit, k)).coeff(k - 1);
}

int strip_order(const BiPoly& p) {
  // order in x of p(x, 0) after removing the y-power
  int v = p.val_y();
  return p.shifted(0, -v).at_y(Gauss(0)).order();
}

}  // namespace

Gauss index_along(const MeroField& germ, const CurveWitness& w, int trunc) {
  return residue_on_axis(straighten(germ, w), trunc);
}

Gauss asymptotic_order(const MeroField& germ, const CurveWitness& w, int trunc) {
  return invariants_along(germ, w, trunc).asymptotic_order;
}

std::optional<int> milnor_number(const MeroField& germ) {
  const PolyVectorField& z = germ.core();
  if (!z.p.constant_term().is_zero() || !z.q.constant_term().is_zero()) return 0;
  return intersection_multiplicity(z.p, z.q);
}

InvariantValues invariants_along(const MeroField& germ, const CurveWitness& w, int trunc) {
  MeroField s = straighten(germ, w);
  InvariantValues out;
  out.multiplicity = s.core().p.at_y(Gauss(0)).order();
  out.index = residue_on_axis(s, trunc);
  int d = s.divisor_order(BiPoly::y());
  int ord_f = strip_order(s.num()) - strip_order(s.den()) + out.multiplicity;
  out.asymptotic_order = Gauss(ord_f) + Gauss(d) * out.index;
  out.milnor = milnor_number(germ);
  return out;
}

}  // namespace folia
