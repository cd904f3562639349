#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>

#include "field_parser.hpp"
#include "report.hpp"

namespace folia::cli {

namespace {

struct Options {
  bool json = false;
  int trunc = 32;
  int max_blowups = 64;
  std::string field;
  std::string germ;
  std::string num = "1";
  std::string den = "1";
  std::string line = "0,1";
  std::string rule;
  int point = 0;
  bool dot = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

MeroField local_germ(const Options& o) {
  if (o.germ.empty()) throw UsageError("--germ is required");
  BiPoly f = parse_polynomial(o.num), g = parse_polynomial(o.den);
  if (f.is_zero() || g.is_zero()) throw UsageError("multipliers must be nonzero");
  return MeroField(ChartId::LOCAL, f, g, parse_field(o.germ));
}

/// "a,b" as the line a x + b y = 0.
CurveWitness parse_line(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--line expects a,b");
  Gauss a, b;
  try {
    a = parse_gauss(text.substr(0, comma));
    b = parse_gauss(text.substr(comma + 1));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--line: ") + e.what());
  }
  if (a.is_zero() && b.is_zero()) throw UsageError("--line must not be 0,0");
  return CurveWitness::line(a, b);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json analyze_json(const PolyVectorField& x, const Options& o) {
  SaturationResult sat = saturate(x);
  Json j{{"field", to_string(x)}, {"degree", x.degree()}};
  j["saturation"] = {{"scalar", to_string(sat.scalar)}, {"core", to_string(sat.core)}};
  j["infinity_invariant"] = x.degree() >= 2 ? Json(infinity_invariant(x)) : Json(true);

  CommonZeros zs = affine_singularities(x);
  Json pts = Json::array();
  for (const auto& p : zs.points) {
    MeroField g(ChartId::LOCAL, sat.core.translate(p.first, p.second));
    pts.push_back({{"location", to_json(p)}, {"classification", to_json(classify_singularity(g, o.trunc))}});
  }
  j["affine_singularities"] = {{"complete", zs.complete}, {"points", pts}};
  if (!zs.complete) j["affine_singularities"]["unresolved"] = zs.unresolved;

  Json inf = nullptr, top = nullptr;
  if (x.degree() >= 2 && infinity_invariant(x)) {
    InfinityScan scan = singularities_at_infinity(x, o.trunc);
    Json ipts = Json::array();
    for (const auto& s : scan.points) ipts.push_back(to_json(s));
    inf = {{"complete", scan.complete}, {"points", ipts}};
    if (!scan.complete) inf["unresolved"] = scan.unresolved;
    top = to_json(classify_top_component(x));
  }
  j["infinity"] = inf;
  j["top_component"] = top;
  PipelineOptions po{o.trunc, o.max_blowups, true};
  j["verdict"] = to_json(completeness_verdict(x, po));
  return j;
}

void print_analysis(const Json& j, std::ostream& out) {
  out << "field: " << j["field"].get<std::string>() << "\n";
  out << "degree: " << j["degree"].get<int>() << "\n";
  out << "saturation: (" << j["saturation"]["scalar"].get<std::string>() << ") * ["
      << j["saturation"]["core"].get<std::string>() << "]\n";
  out << "line at infinity invariant: " << yes_no(j["infinity_invariant"].get<bool>()) << "\n";
  out << "affine singularities:";
  if (j["affine_singularities"]["points"].empty()) out << " none";
  out << "\n";
  for (const auto& p : j["affine_singularities"]["points"])
    out << "  (" << p["location"][0].get<std::string>() << ", " << p["location"][1].get<std::string>() << ")  "
        << p["classification"]["type"].get<std::string>() << "\n";
  if (!j["infinity"].is_null()) {
    out << "singularities at infinity:\n";
    for (const auto& p : j["infinity"]["points"])
      out << "  " << p["chart"].get<std::string>() << " (" << p["location"][0].get<std::string>() << ", "
          << p["location"][1].get<std::string>() << ")  " << p["classification"]["type"].get<std::string>()
          << "  dicritical: " << p["dicritical_hint"].get<std::string>() << "\n";
    if (!j["infinity"]["complete"].get<bool>())
      out << "  unresolved: " << j["infinity"]["unresolved"].get<std::string>() << "\n";
  }
  if (!j["top_component"].is_null()) {
    const Json& item = j["top_component"]["item"];
    out << "top component item: " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
  }
  out << "verdict: " << j["verdict"]["status"].get<std::string>() << "\n";
  for (const auto& s : j["verdict"]["certificate"]) {
    out << "  " << s["rule"].get<std::string>();
    for (const auto& [k, v] : s["data"].items()) out << " " << k << "=" << v.get<std::string>();
    out << "\n";
  }
}

int cmd_analyze(const Options& o, std::ostream& out) {
  Json j = analyze_json(parse_field(o.field), o);
  if (o.json) out << j.dump(2) << "\n";
  else print_analysis(j, out);
  return 0;
}

int cmd_resolve(const Options& o, std::ostream& out) {
  MeroField germ;
  if (!o.germ.empty()) {
    germ = local_germ(o);
  } else {
    if (o.field.empty()) throw UsageError("resolve needs a field or --germ");
    PolyVectorField x = parse_field(o.field);
    if (x.degree() < 2 || !infinity_invariant(x)) throw AnalysisError("no singularities on an invariant line at infinity");
    InfinityScan scan = singularities_at_infinity(x, o.trunc);
    if (o.point < 0 || o.point >= static_cast<int>(scan.points.size()))
      throw UsageError("--point out of range (" + std::to_string(scan.points.size()) + " points at infinity)");
    germ = scan.points[static_cast<std::size_t>(o.point)].germ;
  }
  ResolutionTree t = seidenberg_resolve(germ, o.max_blowups, false, o.trunc);
  if (o.dot) {
    out << dual_graph_dot(t);
  } else if (o.json) {
    out << to_json(t).dump(2) << "\n";
  } else {
    out << "germ: " << to_string(t.input) << "\n";
    out << "blow-ups: " << t.blowups() << (t.dicritical() ? " (dicritical)" : "") << "\n";
    for (const auto& c : t.components)
      out << "  D" << c.id << "  self-intersection " << c.self_intersection << "  order " << c.field_order
          << (c.invariant ? "" : "  non-invariant") << "\n";
    for (const auto& s : t.terminals)
      out << "  terminal " << to_string(s.classification.type) << " on " << s.components.size() << " component(s)\n";
    out << "adapted poles: " << yes_no(adapted_poles(t).adapted) << "\n";
  }
  return 0;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  MeroField germ = local_germ(o);
  InvariantValues v = invariants_along(germ, parse_line(o.line), o.trunc);
  Json j{{"germ", to_string(germ)},
         {"multiplicity", v.multiplicity},
         {"index", to_json(v.index)},
         {"asymptotic_order", to_json(v.asymptotic_order)},
         {"milnor", v.milnor ? Json(*v.milnor) : Json(nullptr)}};
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "multiplicity: " << v.multiplicity << "\nindex: " << to_string(v.index)
        << "\nasymptotic order: " << to_string(v.asymptotic_order)
        << "\nmilnor: " << (v.milnor ? std::to_string(*v.milnor) : "infinite") << "\n";
  }
  return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
  PipelineOptions po{o.trunc, o.max_blowups, true};
  out << to_json(completeness_verdict(parse_field(o.field), po)).dump(2) << "\n";
  return 0;
}

/// m, n with the core a constant multiple of m x Dx - n y Dy.
std::pair<long, long> linear_exponents(const MeroField& g) {
  const PolyVectorField& z = g.core();
  Gauss a = z.p.coeff(1, 0), b = z.q.coeff(0, 1);
  if (z.p != BiPoly::monomial(1, 0, a) || z.q != BiPoly::monomial(0, 1, b) || a.is_zero())
    throw AnalysisError("core is not diagonal linear");
  Gauss r = -b / a;
  if (!r.is_real() || sgn(r.re()) <= 0) throw AnalysisError("eigenvalue ratio is not negative rational");
  return {r.re().get_den().get_si(), r.re().get_num().get_si()};
}

int cmd_sc(const Options& o, std::ostream& out) {
  MeroField g = local_germ(o);
  Json j;
  if (o.rule == "obsidiota") {
    if (!g.core().q.at_y(Gauss(0)).is_zero()) throw AnalysisError("the x-axis is not invariant");
    UniPoly den = g.den().at_y(Gauss(0));
    if (den.is_zero()) throw AnalysisError("pole along the x-axis");
    j = to_json(sc_1d_germ(g.num().at_y(Gauss(0)) * g.core().p.at_y(Gauss(0)), -den.order()));
  } else if (o.rule == "residues") {
    TimeformResidues r = timeform_residues(g, parse_line(o.line));
    Json rs = Json::array();
    for (const auto& x : r.residues) rs.push_back({{"point", to_json(x.point)}, {"value", to_json(x.value)}});
    j = {{"residues", rs}, {"zero_sum_subsets", r.zero_sum_subsets}};
  } else if (o.rule == "le3.1") {
    auto [m, n] = linear_exponents(g);
    j = to_json(check_le31(g.num(), g.den(), m, n));
  } else if (o.rule == "le3.2") {
    j = to_json(check_le32(g));
  } else if (o.rule == "le3.3") {
    j = to_json(check_le33(g));
  } else if (o.rule == "selano") {
    j = to_json(classify_saddle_node(g));
  } else if (o.rule == "model") {
    j = to_json(recognize_model(g, 8, o.trunc));
  } else {
    throw UsageError("unknown rule '" + o.rule + "'");
  }
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [k, v] : j.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Completeness analysis of polynomial vector fields on C^2", "folia"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--trunc", o.trunc, "Truncation order of formal computations")->check(CLI::Range(2, 4096));
  app.add_option("--max-blowups", o.max_blowups, "Cap on blow-ups per resolution")->check(CLI::Range(1, 100000));

  auto germ_opts = [&](CLI::App* s) {
    s->add_option("--num", o.num, "Zero multiplier of the germ");
    s->add_option("--den", o.den, "Pole multiplier of the germ");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Full report on a polynomial field");
  analyze->add_option("field", o.field)->required();

  CLI::App* resolve = app.add_subcommand("resolve", "Resolve a singularity at infinity or a local germ");
  resolve->add_option("field", o.field);
  resolve->add_option("--point", o.point, "Index of the singularity at infinity");
  resolve->add_option("--germ", o.germ, "Germ at the origin");
  germ_opts(resolve);
  resolve->add_flag("--dot", o.dot, "Dual graph in DOT");

  CLI::App* inv = app.add_subcommand("invariants", "Multiplicity, index and asymptotic order along a line");
  inv->add_option("--germ", o.germ)->required();
  inv->add_option("--line", o.line, "a,b for the line a x + b y = 0");
  germ_opts(inv);

  CLI::App* check = app.add_subcommand("check-complete", "Completeness verdict as JSON");
  check->add_option("field", o.field)->required();

  CLI::App* sc = app.add_subcommand("sc-rules", "Run one semicompleteness rule on a germ");
  sc->add_option("rule", o.rule, "obsidiota, residues, le3.1, le3.2, le3.3, selano or model")->required();
  sc->add_option("--germ", o.germ)->required();
  sc->add_option("--line", o.line, "a,b for the line a x + b y = 0 (residues)");
  germ_opts(sc);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (resolve->parsed()) return cmd_resolve(o, out);
    if (inv->parsed()) return cmd_invariants(o, out);
    if (check->parsed()) return cmd_check(o, out);
    return cmd_sc(o, out);
  } catch (const ParseError& e) {
    err << "syntax error at " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "analysis error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace folia::cli
