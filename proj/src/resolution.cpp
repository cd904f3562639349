#include "folia/resolution.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace folia {

namespace {

struct Pending {
  MeroField germ;
  PointRef where;
  int along_x = 0;  // component carried by the local axis {x = 0}
  int along_y = 0;  // component carried by {y = 0}
  bool forced = false;
};

std::pair<int, int> edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::string point_label(const PointRef& p) {
  if (p.node == 0) return "origin";
  return "pi" + std::to_string(p.node) + "." + to_string(p.chart) + "(" + to_string(p.location.first) + ", " +
         to_string(p.location.second) + ")";
}

}  // namespace

bool ResolutionTree::dicritical() const {
  return std::any_of(components.begin(), components.end(), [](const DivisorComponent& c) { return !c.invariant; });
}

bool needs_blowup(const Classification& c) {
  switch (c.type) {
    case SingularityType::NILPOTENT:
    case SingularityType::ZERO_LINEAR_PART: return true;
    case SingularityType::DICRITICAL_LINEARIZABLE: return c.eigen.p == 1 && c.eigen.q == 1;
    default: return false;
  }
}

ResolutionTree seidenberg_resolve(const MeroField& germ, int max_blowups, bool force_first, int trunc) {
  ResolutionTree tree;
  tree.input = germ;
  if (germ.foliation_order() == 0) throw AnalysisError("resolution needs a singular point at the origin");
  std::deque<Pending> work;
  work.push_back({germ, PointRef{}, 0, 0, force_first});
  while (!work.empty()) {
    Pending cur = std::move(work.front());
    work.pop_front();
    Classification cls = classify_singularity(cur.germ, trunc);
    std::vector<int> through;
    for (int c : {cur.along_x, cur.along_y}) {
      if (c != 0) through.push_back(c);
    }
    if (!cur.forced && !needs_blowup(cls)) {
      tree.linearization_undecided = tree.linearization_undecided || cls.linearization_undecided;
      tree.terminals.push_back({cur.where, through, cls, cur.germ});
      continue;
    }
    if (tree.blowups() >= max_blowups) {
      throw AnalysisError("resolution exceeded " + std::to_string(max_blowups) + " blow-ups");
    }
    BlowupNode node;
    node.id = tree.blowups() + 1;
    node.center = cur.where;
    node.center_class = cls;
    node.through = through;
    node.result = blow_up(cur.germ, false, trunc);
    if (!node.result.complete) {
      throw AnalysisError("divisor point outside Q(i): " + node.result.unresolved);
    }
    node.conservation = check_conservation(cur.germ, node.result, false, trunc);
    int j = node.id;
    tree.components.push_back({j, -1, !node.result.dicritical, node.result.exceptional_order, j});
    for (int c : through) tree.components[static_cast<std::size_t>(c - 1)].self_intersection -= 1;
    if (through.size() == 2) std::erase(tree.edges, edge(through[0], through[1]));
    for (int c : through) tree.edges.push_back(edge(c, j));
    for (const auto& d : node.result.divisor_singularities) {
      Pending next{d.germ, PointRef{j, d.chart, d.location}, 0, 0, false};
      if (d.chart == BlowupChart::XT) {
        next.along_x = j;
        next.along_y = d.location.second.is_zero() ? cur.along_y : 0;
      } else {
        next.along_x = cur.along_x;
        next.along_y = j;
      }
      work.push_back(std::move(next));
    }
    tree.nodes.push_back(std::move(node));
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

std::vector<std::vector<Rat>> intersection_matrix(const ResolutionTree& tree) {
  std::size_t n = tree.components.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = tree.components[i].self_intersection;
  for (const auto& [a, b] : tree.edges) {
    m[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] += 1;
    m[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] += 1;
  }
  return m;
}

bool negative_definite(const std::vector<std::vector<Rat>>& m) {
  // Gaussian elimination: the pivots are ratios of consecutive leading minors
  auto a = m;
  std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a[k][k]) >= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rat f = a[i][k] / a[k][k];
      for (std::size_t c = k; c < n; ++c) a[i][c] -= f * a[k][c];
    }
  }
  return true;
}

AdaptedPolesReport adapted_poles(const ResolutionTree& tree) {
  AdaptedPolesReport out;
  for (const auto& c : tree.components) {
    if (c.invariant && c.field_order == 0) out.offending_components.push_back(c.id);
  }
  out.adapted = out.offending_components.empty();
  return out;
}

std::string dual_graph_dot(const ResolutionTree& tree) {
  std::ostringstream os;
  os << "graph resolution {\n";
  for (const auto& c : tree.components) {
    os << "  D" << c.id << " [shape=box, label=\"D" << c.id << " (s=" << c.self_intersection << ", ord=" << c.field_order
       << ")\"" << (c.invariant ? "" : ", style=dashed") << "];\n";
  }
  for (const auto& [a, b] : tree.edges) os << "  D" << a << " -- D" << b << ";\n";
  for (std::size_t i = 0; i < tree.terminals.size(); ++i) {
    const auto& t = tree.terminals[i];
    os << "  T" << i + 1 << " [shape=ellipse, label=\"" << to_string(t.classification.type) << " at "
       << point_label(t.where) << "\"];\n";
    for (int c : t.components) os << "  T" << i + 1 << " -- D" << c << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace folia
