// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "folia/completeness.hpp"
#include "folia/conservation.hpp"
#include "folia/semicomplete.hpp"
#include "support/germs.hpp"
#include "support/models.hpp"

using namespace folia;
using folia::models::X;
using folia::models::Y;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

BiPoly xp(unsigned k) { return pow(X(), k); }
BiPoly yp(unsigned k) { return pow(Y(), k); }

/// Order of the jet: lowest total degree present in either component.
int jet_order(const PolyVectorField& z) {
  int best = -1;
  for (const BiPoly* c : {&z.p, &z.q}) {
    for (const auto& [e, coeff] : c->terms()) {
      int d = e.first + e.second;
      if (best < 0 || d < best) best = d;
    }
  }
  return best;
}

int monomial_degree(const BiPoly& m) {
  const auto& t = m.terms();
  return t.begin()->first.first + t.begin()->first.second;
}

std::vector<PolyVectorField> germ_corpus() {
  gen::Source src(20261016);
  std::vector<PolyVectorField> out;
  for (int k = 0; k < 200; ++k) out.push_back(gen::split_cone_germ(src, 4, 8));
  return out;
}

Outcome index_sum() {
  Outcome o;
  int n = 0;
  for (const auto& z : germ_corpus()) {
    MeroField g(ChartId::LOCAL, z);
    BlowupResult b = blow_up(g);
    if (b.dicritical || !b.complete) {
      o.fail("germ " + to_string(z) + " is dicritical or has non-Gaussian divisor points");
      continue;
    }
    Gauss total(0);
    for (const auto& s : b.divisor_singularities) total += index_along(s.germ, divisor_witness(s));
    if (total != Gauss(-1)) o.fail("sum " + to_string(total) + " for " + to_string(z));
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " germs, every index sum is -1";
  return o;
}

Outcome order_sum() {
  Outcome o;
  int n = 0;
  for (const auto& z : germ_corpus()) {
    MeroField g(ChartId::LOCAL, z);
    BlowupResult b = blow_up(g);
    if (b.dicritical) {
      o.fail("dicritical germ " + to_string(z));
      continue;
    }
    int total = 0;
    for (const auto& s : b.divisor_singularities) total += multiplicity_along(s.germ, divisor_witness(s));
    if (total != jet_order(z) + 1) o.fail("sum " + std::to_string(total) + " for " + to_string(z));
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " germs, every order sum is ord + 1";
  return o;
}

Outcome divisor_order() {
  Outcome o;
  gen::Source src(7);
  int n = 0;
  for (const auto& z : germ_corpus()) {
    BiPoly f = gen::random_monomial(src), g = gen::random_monomial(src);
    MeroField m(ChartId::LOCAL, f, g, z);
    BlowupResult b = blow_up(m);
    int expected = monomial_degree(f) + jet_order(z) - monomial_degree(g) - 1;
    if (b.exceptional_order != expected) {
      o.fail("order " + std::to_string(b.exceptional_order) + " != " + std::to_string(expected) + " for " + to_string(m));
    }
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " multiplied germs";
  return o;
}

Outcome seidenberg_shapes() {
  Outcome o;
  ResolutionTree cusp = seidenberg_resolve(MeroField(ChartId::LOCAL, {Y(), X() * X()}));
  std::vector<int> s;
  for (const auto& c : cusp.components) s.push_back(c.self_intersection);
  std::sort(s.begin(), s.end());
  if (cusp.blowups() != 3) o.fail("cusp used " + std::to_string(cusp.blowups()) + " blow-ups");
  if (s != std::vector<int>{-3, -2, -1}) o.fail("cusp self-intersections differ");
  if (cusp.edges.size() != 2) o.fail("cusp dual graph is not a chain of three");
  ResolutionTree radial = seidenberg_resolve(MeroField(ChartId::LOCAL, {X(), Y()}));
  if (radial.blowups() != 1 || !radial.dicritical()) o.fail("radial germ is not one dicritical blow-up");
  ResolutionTree saddle = seidenberg_resolve(MeroField(ChartId::LOCAL, {X(), -Y()}));
  if (saddle.blowups() != 0) o.fail("saddle needed a blow-up");
  if (o.pass) o.detail = "cusp 3 (-3, -2, -1), radial 1 dicritical, saddle 0";
  return o;
}

bool has_rule(const Verdict& v, const std::string& rule) {
  return std::any_of(v.certificate.begin(), v.certificate.end(), [&](const CertificateStep& s) { return s.rule == rule; });
}

/// x^n y^m (m x Dx - n y Dy)
PolyVectorField monomial_model(long n, long m) {
  BiPoly mono = xp(static_cast<unsigned>(n)) * yp(static_cast<unsigned>(m));
  return {mono * X().scaled(Gauss(m)), mono * Y().scaled(Gauss(-n))};
}

struct FamilyMember {
  PolyVectorField field;
  bool needs_dicritical = false;
};

std::vector<FamilyMember> positive_family() {
  std::vector<FamilyMember> out;
  for (unsigned k = 0; k <= 6; ++k) out.push_back({{yp(k), BiPoly(0)}, false});
  gen::Source src(5);
  for (int r = 0; r < 20; ++r) {
    UniPoly p = src.uni(static_cast<int>(src.small(0, 5)));
    out.push_back({{BiPoly::from_uni(p, true) * X(), BiPoly(0)}, false});
  }
  for (long n = 1; n <= 5; ++n) {
    for (long m = 1; m <= 5; ++m) {
      if (std::gcd(n, m) == 1) out.push_back({monomial_model(n, m), true});
    }
  }
  return out;
}

Outcome positive_models() {
  Outcome o;
  auto family = positive_family();
  for (const auto& f : family) {
    Verdict v = completeness_verdict(f.field);
    if (v.status != VerdictStatus::COMPLETE_MODEL) o.fail(to_string(f.field) + " gave " + to_string(v.status));
    if (f.needs_dicritical && !has_rule(v, "dicritical")) o.fail(to_string(f.field) + " shows no dicritical point");
  }
  if (o.pass) o.detail = std::to_string(family.size()) + " fields complete, monomial models dicritical at infinity";
  return o;
}

Outcome negative_certificates() {
  Outcome o;
  std::vector<PolyVectorField> fields{
      {xp(2), BiPoly(0)},
      {xp(3), BiPoly(0)},
      {xp(2) + Y(), X() * Y()},
      {xp(3) + Y(), X()},
  };
  std::string rules;
  for (const auto& f : fields) {
    Verdict v = completeness_verdict(f);
    if (v.status != VerdictStatus::NOT_COMPLETE) {
      o.fail(to_string(f) + " gave " + to_string(v.status));
      continue;
    }
    if (!replay_certificate(f, v)) o.fail("certificate of " + to_string(f) + " does not replay");
    rules += (rules.empty() ? "" : ", ") + v.certificate.back().rule;
  }
  if (o.pass) o.detail = "4 fields refuted and replayed (" + rules + ")";
  return o;
}

Outcome infinity_bound() {
  Outcome o;
  std::size_t worst = 0;
  auto family = positive_family();
  for (const auto& f : family) {
    InfinityScan scan = singularities_at_infinity(f.field);
    if (!scan.complete) o.fail("non-Gaussian points at infinity for " + to_string(f.field));
    worst = std::max(worst, scan.points.size());
    if (scan.points.size() > 3) o.fail(to_string(f.field) + " has " + std::to_string(scan.points.size()) + " points");
  }
  if (o.pass) o.detail = std::to_string(family.size()) + " fields, at most " + std::to_string(worst) + " points on the line";
  return o;
}

Outcome model_fixed_point() {
  Outcome o;
  auto expect = [&](const MeroField& g, ModelKind kind, int level, int d) {
    ModelTag t = recognize_model(g);
    if (t.kind != kind || t.level != level || t.d != d) o.fail("expected " + std::to_string(level) + "-level model, got " + t.tag());
  };
  expect(models::z111(), ModelKind::Z_1_11, 0, 1);
  expect(models::z111_tower(1), ModelKind::Z_1_11, 1, 1);
  if (multiplicity_along(models::z111_tower(1), CurveWitness::y_axis_zero()) != 2) o.fail("Z_1_11 tower multiplicity");
  int germs = 2;
  for (int d = 1; d <= 3; ++d) {
    expect(models::z012(d), ModelKind::Z_0_12, 0, d);
    expect(models::z100(d), ModelKind::Z_1_00, 0, d);
    expect(models::z012_tower(d, 1), ModelKind::Z_0_12, 1, d);
    expect(models::z100_tower(d, 1), ModelKind::Z_1_00, 1, d);
    if (multiplicity_along(models::z012_tower(d, 1), CurveWitness::y_axis_zero()) != 2) o.fail("Z_0_12 tower multiplicity");
    if (multiplicity_along(models::z100_tower(d, 1), CurveWitness::y_axis_zero()) != 2) o.fail("Z_1_00 tower multiplicity");
    germs += 4;
  }
  if (o.pass) o.detail = std::to_string(germs) + " germs recognized, tower multiplicity 2";
  return o;
}

SelanoForm expected_form(int p, int k) {
  if (p == 1 && k == 0) return SelanoForm::FORM1;
  if (k == p) return SelanoForm::FORM2;
  if (k == p - 1) return SelanoForm::FORM3_CONDITIONAL;
  return SelanoForm::NONE;
}

Outcome saddle_node_rules() {
  Outcome o;
  gen::Source src(9);
  int n = 0;
  for (int p = 1; p <= 4; ++p) {
    for (int k = 0; k <= 5; ++k) {
      for (long lam : {0L, 1L, -3L}) {
        // y^-k [(x(1 + lam y^p) + y R) Dx + y^(p+1) Dy]
        BiPoly y_p = yp(static_cast<unsigned>(p));
        PolyVectorField z{X() * (BiPoly(1) + y_p.scaled(Gauss(lam))) + Y() * src.poly(2, 2), y_p * Y()};
        MeroField g(ChartId::LOCAL, BiPoly(1), yp(static_cast<unsigned>(k)), z);
        SaddleNodeData s = classify_saddle_node(g);
        if (s.p != p || s.k != k || s.form != expected_form(p, k)) {
          o.fail("p=" + std::to_string(p) + " k=" + std::to_string(k) + " gave " + to_string(s.form));
        }
        ++n;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " Dulac germs classified";
  return o;
}

PolyVectorField random_field(gen::Source& src, int d) {
  PolyVectorField f;
  do f = {src.poly(d, 5), src.poly(d, 5)};
  while (f.is_zero() || f.degree() != d);
  return f;
}

Outcome cross_chart() {
  Outcome o;
  gen::Source src(10);
  int shared = 0;
  for (int k = 0; k < 100; ++k) {
    PolyVectorField f = random_field(src, static_cast<int>(src.small(1, 4)));
    MeroField affine(ChartId::AFFINE, f);
    MeroField u = to_chart(f, ChartId::U_CHART), s = to_chart(f, ChartId::S_CHART);
    if (transport(u, ChartId::AFFINE) != affine || transport(s, ChartId::AFFINE) != affine) o.fail("round trip of " + to_string(f));
    if (!cross_chart_check(u, s) || !cross_chart_check(s, u)) o.fail("U and S disagree for " + to_string(f));
    // [1:v:0] in U is [1/v:1:0] in S
    InfinityScan su = scan_chart(f, ChartId::U_CHART), ss = scan_chart(f, ChartId::S_CHART);
    std::set<std::string> from_u, from_s;
    for (const auto& p : su.points) {
      if (!p.location.second.is_zero()) from_u.insert(to_string(p.location.second.inverse()) + ":" + to_string(p.classification.type));
    }
    for (const auto& p : ss.points) {
      if (!p.location.first.is_zero()) from_s.insert(to_string(p.location.first) + ":" + to_string(p.classification.type));
    }
    if (from_u != from_s) o.fail("points at infinity differ for " + to_string(f));
    shared += static_cast<int>(from_u.size());
  }
  if (o.pass) o.detail = "100 fields, " + std::to_string(shared) + " shared points at infinity matched";
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"index sum over the exceptional divisor", index_sum},
      {"order sum over the exceptional divisor", order_sum},
      {"exceptional order of multiplied germs", divisor_order},
      {"resolution shapes of cusp, radial and saddle", seidenberg_shapes},
      {"positive normal form families", positive_models},
      {"negative certificates replay", negative_certificates},
      {"at most three points at infinity", infinity_bound},
      {"model recognition and tower multiplicity", model_fixed_point},
      {"saddle-node forms", saddle_node_rules},
      {"cross-chart coherence", cross_chart},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu %s: %s (%s) [%.2fs]\n", i + 1, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
