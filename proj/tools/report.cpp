#include "report.hpp"

namespace folia::cli {

Json to_json(const Gauss& z) { return to_string(z); }

Json to_json(const std::pair<Gauss, Gauss>& p) { return Json::array({to_json(p.first), to_json(p.second)}); }

namespace {

Json optional_gauss(const std::optional<Gauss>& g) { return g ? to_json(*g) : Json(nullptr); }

Json point_ref(const PointRef& r) {
  return {{"node", r.node}, {"chart", to_string(r.chart)}, {"location", to_json(r.location)}};
}

}  // namespace

Json to_json(const Classification& c) {
  const EigenData& e = c.eigen;
  Json j{{"type", to_string(c.type)},
         {"ratio_class", to_string(e.ratio_class)},
         {"trace", to_json(e.trace)},
         {"det", to_json(e.det)},
         {"lambda1", optional_gauss(e.lambda1)},
         {"lambda2", optional_gauss(e.lambda2)}};
  if (e.ratio_class == RatioClass::RATIONAL_RATIO) j["ratio"] = {e.p, e.q};
  j["linearization_undecided"] = c.linearization_undecided;
  return j;
}

Json to_json(const ConservationReport& r) {
  Json laws = Json::array();
  for (const LawCheck& l : r.laws) {
    Json summands = Json::array();
    for (const auto& [where, v] : l.summands) summands.push_back({{"point", where}, {"value", to_json(v)}});
    laws.push_back({{"law", l.law},
                    {"applicable", l.applicable},
                    {"pass", l.pass},
                    {"total", to_json(l.total)},
                    {"expected", to_json(l.expected)},
                    {"summands", summands}});
  }
  return {{"complete", r.complete}, {"pass", r.pass()}, {"laws", laws}};
}

Json to_json(const ResolutionTree& t) {
  Json nodes = Json::array();
  for (const BlowupNode& n : t.nodes) {
    nodes.push_back({{"id", n.id},
                     {"center", point_ref(n.center)},
                     {"center_class", to_json(n.center_class)},
                     {"through", n.through},
                     {"center_order", n.result.center_order},
                     {"exceptional_order", n.result.exceptional_order},
                     {"dicritical", n.result.dicritical},
                     {"conservation", to_json(n.conservation)}});
  }
  Json comps = Json::array();
  for (const DivisorComponent& c : t.components) {
    comps.push_back({{"id", c.id},
                     {"self_intersection", c.self_intersection},
                     {"invariant", c.invariant},
                     {"field_order", c.field_order}});
  }
  Json edges = Json::array();
  for (const auto& [a, b] : t.edges) edges.push_back({a, b});
  Json terms = Json::array();
  for (const TerminalSingularity& s : t.terminals) {
    terms.push_back({{"where", point_ref(s.where)},
                     {"components", s.components},
                     {"classification", to_json(s.classification)},
                     {"germ", to_string(s.germ)}});
  }
  AdaptedPolesReport ap = adapted_poles(t);
  return {{"input", to_string(t.input)},
          {"blowups", t.blowups()},
          {"dicritical", t.dicritical()},
          {"nodes", nodes},
          {"components", comps},
          {"edges", edges},
          {"terminals", terms},
          {"negative_definite", negative_definite(intersection_matrix(t))},
          {"adapted_poles", {{"adapted", ap.adapted}, {"offending", ap.offending_components}}},
          {"linearization_undecided", t.linearization_undecided}};
}

Json to_json(const Verdict& v) {
  Json form = nullptr;
  if (const auto& f = v.theorem_a_form) {
    form = {{"form", f->form}};
    if (f->form == 1) {
      form["epsilon"] = f->epsilon;
      form["P"] = to_string(f->p, "y");
    } else {
      form["n"] = f->n;
      form["m"] = f->m;
      form["scale"] = to_json(f->scale);
    }
  }
  Json cert = Json::array();
  for (const CertificateStep& s : v.certificate) {
    Json data = Json::object();
    for (const auto& [k, val] : s.data) data[k] = val;
    cert.push_back({{"rule", s.rule}, {"chart", to_string(s.chart)}, {"location", to_json(s.location)}, {"data", data}});
  }
  return {{"status", to_string(v.status)}, {"theorem_a_form", form}, {"certificate", cert}};
}

Json to_json(const ScVerdict& v) { return {{"status", to_string(v.status)}, {"rule", v.rule}, {"reason", v.reason}}; }

Json to_json(const SaddleNodeData& s) {
  Json j{{"p", s.p}, {"k", s.k}, {"strong_direction", to_json(s.strong_direction)}, {"form", to_string(s.form)}};
  j["strong_manifold"] = s.strong_manifold ? Json(to_string(s.strong_manifold->curve)) : Json(nullptr);
  j["verdict"] = to_json(s.verdict);
  return j;
}

Json to_json(const ModelTag& m) {
  Json points = Json::array();
  for (const ModelPoint& p : m.points) {
    points.push_back({{"chart", to_string(p.chart)},
                      {"location", to_json(p.location)},
                      {"type", to_string(p.type)},
                      {"along", to_json(p.along)},
                      {"transverse", to_json(p.transverse)},
                      {"transverse_order", p.transverse_order},
                      {"nested_level", p.nested_level}});
  }
  Json j{{"kind", to_string(m.kind)}, {"tag", m.kind == ModelKind::NONE ? Json(nullptr) : Json(m.tag())}};
  j["rule"] = m.kind == ModelKind::NONE ? Json(nullptr) : Json(m.rule());
  j["level"] = m.level;
  j["d"] = m.d;
  j["divisor_order"] = m.divisor_order;
  j["points"] = points;
  j["reason"] = m.reason;
  return j;
}

Json to_json(const TopComponentClass& c) {
  return {{"item", c.item == 0 ? Json("UNKNOWN") : Json(c.item)},
          {"a", c.a},
          {"n", c.n},
          {"m", c.m},
          {"i", c.i},
          {"j", c.j},
          {"decided", c.decided},
          {"reason", c.reason}};
}

Json to_json(const InfinitySingularity& s) {
  return {{"chart", to_string(s.chart)},
          {"location", to_json(s.location)},
          {"classification", to_json(s.classification)},
          {"dicritical_hint", to_string(s.hint)},
          {"germ", to_string(s.germ)}};
}

}  // namespace folia::cli
