#include <doctest.h>

#include <algorithm>

#include "folia/resolution.hpp"
#include "support/germs.hpp"

using namespace folia;

namespace {

BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }

MeroField germ(PolyVectorField z) { return MeroField(ChartId::LOCAL, z); }

void check_tree_laws(const ResolutionTree& t) {
  for (const auto& n : t.nodes) {
    if (!n.result.dicritical) CHECK(n.conservation.pass());
  }
  for (const auto& term : t.terminals) {
    bool on_dicritical = std::any_of(term.components.begin(), term.components.end(),
                                     [&](int c) { return !t.component(c).invariant; });
    CHECK((is_simple(term.classification.type) || on_dicritical));
    CHECK(!needs_blowup(term.classification));
  }
  CHECK(negative_definite(intersection_matrix(t)));
}

}  // namespace

TEST_CASE("cusp resolves into a -3, -1, -2 chain") {
  auto t = seidenberg_resolve(germ({Y(), X() * X()}));
  REQUIRE(t.blowups() == 3);
  REQUIRE(t.components.size() == 3);
  CHECK(!t.dicritical());
  std::vector<int> s;
  for (const auto& c : t.components) s.push_back(c.self_intersection);
  CHECK(s == std::vector<int>{-3, -2, -1});
  // the last component meets both earlier ones, which no longer meet
  CHECK(t.edges == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}});
  check_tree_laws(t);
  std::string dot = dual_graph_dot(t);
  CHECK(dot.find("D1 (s=-3, ord=") != std::string::npos);
  CHECK(dot.find("D3 (s=-1, ord=") != std::string::npos);
  CHECK(dot.find("D1 -- D3") != std::string::npos);
}

TEST_CASE("radial and saddle") {
  auto r = seidenberg_resolve(germ({X(), Y()}));
  CHECK(r.blowups() == 1);
  CHECK(r.dicritical());
  CHECK(r.terminals.empty());
  CHECK(adapted_poles(r).adapted);

  auto s = seidenberg_resolve(germ({X(), -Y()}));
  CHECK(s.blowups() == 0);
  REQUIRE(s.terminals.size() == 1);
  CHECK(s.terminals[0].classification.type == SingularityType::SIMPLE_HYPERBOLIC);
  CHECK(dual_graph_dot(s).find("D1") == std::string::npos);

  auto f = seidenberg_resolve(germ({X(), -Y()}), 64, true);
  REQUIRE(f.blowups() == 1);
  CHECK(f.terminals.size() == 2);
  CHECK(dual_graph_dot(f).find("\"D1 (s=-1, ord=0)\"") != std::string::npos);
  auto a = adapted_poles(f);
  CHECK(!a.adapted);
  CHECK(a.offending_components == std::vector<int>{1});
  for (const auto& term : f.terminals) CHECK(term.components == std::vector<int>{1});

  auto p = seidenberg_resolve(MeroField(ChartId::LOCAL, BiPoly(1), Y(), {X(), -Y()}), 64, true);
  CHECK(p.component(1).field_order == -1);
  CHECK(adapted_poles(p).adapted);
}

TEST_CASE("resolution failures are loud") {
  // tangent directions are the cube roots of unity
  CHECK_THROWS_AS(seidenberg_resolve(germ({Y() * Y(), X() * X()})), AnalysisError);
  CHECK_THROWS_AS(seidenberg_resolve(germ({Y(), pow(X(), 9U)}), 2), AnalysisError);
  CHECK_THROWS_AS(seidenberg_resolve(germ({BiPoly(1), X()})), AnalysisError);
}

TEST_CASE("higher cusps y Dx + x^k Dy") {
  // leaves of y^2 = c x^(2n+1); the curve y^2 = x^(2n+1) needs n + 2 blow-ups
  for (unsigned k = 2; k <= 8; k += 2) {
    auto t = seidenberg_resolve(germ({Y(), pow(X(), k)}));
    CHECK(t.blowups() == static_cast<int>(k / 2) + 2);
    check_tree_laws(t);
  }
}

TEST_CASE("random germs resolve with sound bookkeeping") {
  gen::Source src(43);
  int resolved = 0, blowups = 0;
  for (int k = 0; k < 40; ++k) {
    PolyVectorField z = gen::split_cone_germ(src, 4, 8, 2);
    try {
      auto t = seidenberg_resolve(germ(z), 20);
      ++resolved;
      blowups += t.blowups();
      check_tree_laws(t);
      for (const auto& c : t.components) CHECK(c.self_intersection <= -1);
    } catch (const AnalysisError& e) {
      // only a non-Gaussian point on the divisor may stop the reduction
      CHECK(std::string(e.what()).find("outside Q(i)") != std::string::npos);
    }
  }
  MESSAGE(resolved, " resolved, ", blowups, " blow-ups");
  CHECK(resolved >= 30);
}

TEST_CASE("nilpotent germs resolve with sound bookkeeping") {
  gen::Source src(47);
  int resolved = 0, blowups = 0;
  for (int k = 0; k < 40; ++k) {
    // y d/dx + c x^2 d/dy plus terms of weighted degree above the cusp
    PolyVectorField z{Y(), X().scaled(src.nonzero_gauss(false)) * X()};
    z.p += BiPoly::monomial(1, 1, Gauss(src.small(-8, 8))) + BiPoly::monomial(3, 0, Gauss(src.small(-8, 8)));
    z.q += BiPoly::monomial(1, 1, Gauss(src.small(-8, 8))) + BiPoly::monomial(0, 2, Gauss(src.small(-8, 8))) +
           BiPoly::monomial(2, 1, Gauss(src.small(-8, 8)));
    try {
      auto t = seidenberg_resolve(germ(z), 20);
      ++resolved;
      blowups += t.blowups();
      check_tree_laws(t);
      CHECK(t.blowups() >= 1);
    } catch (const AnalysisError& e) {
      CHECK(std::string(e.what()).find("outside Q(i)") != std::string::npos);
    }
  }
  MESSAGE(resolved, " resolved, ", blowups, " blow-ups");
  CHECK(resolved >= 10);
}
