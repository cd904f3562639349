#include <doctest.h>

#include <numeric>

#include "folia/completeness.hpp"
#include "support/gen.hpp"

using namespace folia;

namespace {

BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }
BiPoly xp(unsigned k) { return pow(X(), k); }
BiPoly yp(unsigned k) { return pow(Y(), k); }

/// M^-1 X(M w) for M = [[a, b], [c, d]].
PolyVectorField linear_change(const PolyVectorField& v, Gauss a, Gauss b, Gauss c, Gauss d) {
  BiPoly nx = X().scaled(a) + Y().scaled(b), ny = X().scaled(c) + Y().scaled(d);
  BiPoly p = v.p.compose(nx, ny), q = v.q.compose(nx, ny);
  Gauss inv = (a * d - b * c).inverse();
  return {(p.scaled(d) - q.scaled(b)).scaled(inv), (q.scaled(a) - p.scaled(c)).scaled(inv)};
}

PolyVectorField random_linear_change(gen::Source& src, const PolyVectorField& v) {
  while (true) {
    Gauss a = src.small(-3, 3), b = src.small(-3, 3), c = src.small(-3, 3), d = src.small(-3, 3);
    if (!(a * d - b * c).is_zero()) return linear_change(v, a, b, c, d);
  }
}

PolyVectorField item_template(int item, unsigned a, long n) {
  BiPoly x = X(), y = Y();
  switch (item) {
    case 4: return {x * x, -(y * (x.scaled(Gauss(n)) - y.scaled(Gauss(n + 1))))};
    case 5: return PolyVectorField{x * (x - y.scaled(2)), y * (y - x.scaled(2))}.times(pow(x * y * (x - y), a));
    case 6: return PolyVectorField{x * (x - y.scaled(3)), y * (y - x.scaled(3))}.times(pow(x * y * pow(x - y, 2u), a));
    default:
      return PolyVectorField{x * (x.scaled(2) - y.scaled(5)), y * (y - x.scaled(4))}.times(pow(x * y * y * pow(x - y, 3u), a));
  }
}

/// x^n y^m (m x Dx - n y Dy)
PolyVectorField monomial_model(long n, long m) {
  BiPoly mono = xp(static_cast<unsigned>(n)) * yp(static_cast<unsigned>(m));
  return {mono * X().scaled(Gauss(m)), mono * Y().scaled(Gauss(-n))};
}

bool has_rule(const Verdict& v, const std::string& rule) {
  for (const auto& s : v.certificate)
    if (s.rule == rule) return true;
  return false;
}

}  // namespace

TEST_CASE("top component examples") {
  TopComponentClass c = classify_top_component({X() * X(), X() * Y().scaled(2)});
  CHECK(c.item == 2);
  CHECK(c.n == 2);

  c = classify_top_component({X() * X() * Y(), -X() * Y() * Y()});
  CHECK(c.item == 3);
  CHECK(c.i == 1);
  CHECK(c.j == 1);
  CHECK(c.m == 1);
  CHECK(c.n == 1);

  c = classify_top_component({xp(3), BiPoly(0)});
  CHECK(c.item == 0);
  CHECK(c.decided);

  // y^a f Dx with deg f < 3
  c = classify_top_component({yp(4) * (X() * X() + Y()), BiPoly(0)});
  CHECK(c.item == 1);
  CHECK(c.a == 4);

  CHECK_THROWS_AS(classify_top_component({X() * X(), X() * Y()}), AnalysisError);
  CHECK_THROWS_AS(classify_top_component({X() + Y(), Y()}), AnalysisError);
}

TEST_CASE("top component items survive linear changes") {
  gen::Source src(11);
  for (int round = 0; round < 40; ++round) {
    int item = static_cast<int>(src.small(4, 7));
    unsigned a = static_cast<unsigned>(src.small(0, 2));
    long n = src.small(0, 5);
    PolyVectorField t = item_template(item, item == 4 ? 0 : a, n);
    PolyVectorField moved = random_linear_change(src, t).scaled(src.nonzero_gauss(false));
    CAPTURE(to_string(moved));
    TopComponentClass c = classify_top_component(moved);
    CHECK(c.item == item);
    if (item == 4) CHECK(c.n == n);
    else CHECK(c.a == static_cast<long>(a));
  }
}

TEST_CASE("item 3 follows the exponent condition") {
  gen::Source src(12);
  for (long m = 1; m <= 4; ++m) {
    for (long n = 1; n <= 4; ++n) {
      if (std::gcd(m, n) != 1) continue;
      for (unsigned i = 0; i <= 4; ++i) {
        for (unsigned j = 0; j <= 4; ++j) {
          PolyVectorField v = PolyVectorField{X().scaled(Gauss(m)), Y().scaled(Gauss(-n))}.times(xp(i) * yp(j));
          if (v.degree() < 2) continue;
          long s = m * static_cast<long>(i) - n * static_cast<long>(j);
          bool expect = s >= -1 && s <= 1;
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(i);
          CAPTURE(j);
          TopComponentClass c = classify_top_component(random_linear_change(src, v));
          CHECK((c.item == 3) == expect);
        }
      }
    }
  }
  // ratio -1 with eigenlines outside Q(i): (x^2 - 2 y^2)^a (2y Dx + x Dy)
  PolyVectorField z{Y().scaled(2), X()};
  BiPoly quad = X() * X() - Y() * Y().scaled(2);
  for (unsigned a = 1; a <= 3; ++a) {
    TopComponentClass c = classify_top_component(z.times(pow(quad, a)));
    CHECK(c.item == 3);
    CHECK(c.i == static_cast<long>(a));
  }
  CHECK(classify_top_component(z.times(X() * quad)).item == 0);
}

TEST_CASE("polynomial normal forms") {
  auto f = normal_form_match({Y() * Y(), BiPoly(0)});
  REQUIRE(f);
  CHECK(f->form == 1);
  CHECK(f->epsilon == 0);
  CHECK(f->p == UniPoly::monomial(2, Gauss(1)));

  f = normal_form_match(monomial_model(2, 1));
  REQUIRE(f);
  CHECK(f->form == 2);
  CHECK(f->n == 2);
  CHECK(f->m == 1);

  f = normal_form_match({X() * (Y() + BiPoly(3)), BiPoly(0)});
  REQUIRE(f);
  CHECK(f->epsilon == 1);

  CHECK(!normal_form_match({X() * X(), BiPoly(0)}));
  CHECK(!normal_form_match(monomial_model(2, 2)));
  CHECK(!normal_form_match({X() * X() * Y(), X() * Y() * Y()}));
}

TEST_CASE("invariant line obstructions") {
  auto o = invariant_line_escape({X() * X(), BiPoly(0)});
  REQUIRE(o);
  CHECK(o->rule == "escape");
  CHECK(o->restriction.degree() == 2);

  o = invariant_line_escape({xp(3), BiPoly(0)});
  REQUIRE(o);
  CHECK(o->rule == "obsidiota");

  CHECK(!invariant_line_escape({BiPoly(1), Y()}));

  // a quadratic restriction on a tilted line through a singular point
  gen::Source src(13);
  for (int round = 0; round < 20; ++round) {
    Gauss a = src.gauss(false), b = src.gauss(false), k = src.nonzero_gauss(false);
    BiPoly u = X() - BiPoly(a), w = Y() - BiPoly(b) - u.scaled(k);
    PolyVectorField v{u * u, (u * u).scaled(k) + w};
    auto r = invariant_line_escape(v);
    REQUIRE(r);
    CHECK(r->rule == "escape");
    auto again = line_obstruction(v, r->point, r->direction);
    REQUIRE(again);
    CHECK(again->restriction == r->restriction);
  }
}

TEST_CASE("verdict examples") {
  Verdict v = completeness_verdict({X() * X() * Y(), -X() * Y() * Y()});
  CHECK(v.status == VerdictStatus::COMPLETE_MODEL);
  CHECK(has_rule(v, "dicritical"));
  REQUIRE(v.theorem_a_form);
  CHECK(v.theorem_a_form->form == 2);

  v = completeness_verdict({X() * X() + Y(), X() * Y()});
  CHECK(v.status == VerdictStatus::NOT_COMPLETE);
  CHECK(v.certificate.back().rule == "infinity-not-invariant");

  v = completeness_verdict({xp(3), BiPoly(0)});
  CHECK(v.status == VerdictStatus::NOT_COMPLETE);
  CHECK(v.certificate.back().rule == "obsidiota");

  v = completeness_verdict({Y() * Y(), BiPoly(0)});
  CHECK(v.status == VerdictStatus::COMPLETE_MODEL);
  REQUIRE(v.theorem_a_form);
  CHECK(v.theorem_a_form->form == 1);

  v = completeness_verdict({X() + Y(), BiPoly(3)});
  CHECK(v.status == VerdictStatus::COMPLETE_MODEL);
  CHECK(v.certificate.back().rule == "degree1");

  v = completeness_verdict({xp(3) + Y(), X()});
  CHECK(v.status == VerdictStatus::NOT_COMPLETE);
  CHECK(v.certificate.back().rule == "top-component-excluded");

  CHECK_THROWS_AS(completeness_verdict({BiPoly(0), BiPoly(0)}), AnalysisError);
}

TEST_CASE("normal form families are complete models") {
  gen::Source src(14);
  for (int round = 0; round < 20; ++round) {
    UniPoly p = src.uni(static_cast<int>(src.small(0, 6)));
    int eps = static_cast<int>(src.small(0, 1));
    PolyVectorField v{BiPoly::from_uni(p, true) * xp(static_cast<unsigned>(eps)), BiPoly(0)};
    CAPTURE(to_string(v));
    Verdict r = completeness_verdict(v);
    CHECK(r.status == VerdictStatus::COMPLETE_MODEL);
  }
  for (long n = 1; n <= 5; ++n) {
    for (long m = 1; m <= 5; ++m) {
      if (std::gcd(n, m) != 1) continue;
      Verdict r = completeness_verdict(monomial_model(n, m));
      CHECK(r.status == VerdictStatus::COMPLETE_MODEL);
      CHECK(has_rule(r, "dicritical"));
    }
  }
}

TEST_CASE("certificates replay and scalar multiples agree") {
  gen::Source src(15);
  std::vector<PolyVectorField> corpus{
      {X() * X(), BiPoly(0)},
      {xp(3), BiPoly(0)},
      {X() * X() + Y(), X() * Y()},
      {xp(3) + Y(), X()},
      {Y() * Y(), BiPoly(0)},
      {X() * X() * Y(), -X() * Y() * Y()},
      {X() * X() + Y() * Y(), X() * Y()},
      {Y() * Y() + X(), Y()},
      monomial_model(3, 2),
  };
  for (int k = 0; k < 12; ++k) {
    PolyVectorField v{src.poly(2, 4), src.poly(2, 4)};
    if (v.degree() == 2 && !v.homogeneous_part(2).is_zero()) corpus.push_back(v);
  }
  for (const auto& v : corpus) {
    CAPTURE(to_string(v));
    Verdict r = completeness_verdict(v);
    if (r.status == VerdictStatus::NOT_COMPLETE) CHECK(replay_certificate(v, r));
    Gauss c = src.nonzero_gauss(false);
    CHECK(completeness_verdict(v.scaled(c)).status == r.status);
    PipelineOptions serial;
    serial.parallel = false;
    CHECK(completeness_verdict(v, serial).certificate.size() == r.certificate.size());
  }
}

TEST_CASE("tampered certificates do not replay") {
  PolyVectorField v{X() * X(), BiPoly(0)};
  Verdict r = completeness_verdict(v);
  REQUIRE(r.status == VerdictStatus::NOT_COMPLETE);
  Verdict bad = r;
  for (auto& [k, val] : bad.certificate.back().data)
    if (k == "direction") val = "(0, 1)";
  CHECK(!replay_certificate(v, bad));
  CHECK(!replay_certificate({Y() * Y(), BiPoly(0)}, r));
  Verdict complete = completeness_verdict({Y() * Y(), BiPoly(0)});
  CHECK(!replay_certificate({Y() * Y(), BiPoly(0)}, complete));
}
