#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folia/conservation.hpp"

namespace folia {

/// Irreducible component D^j of the exceptional divisor, created by the j-th blow-up.
struct DivisorComponent {
  int id = 0;
  int self_intersection = -1;
  bool invariant = true;
  /// Zero (> 0) or pole (< 0) order of the transformed field along the component.
  int field_order = 0;
  /// Id of the blow-up that created it (equal to id).
  int birth_node = 0;
};

/// Where a point sits: a chart of blow-up number `node`, or the input germ when node is 0.
struct PointRef {
  int node = 0;
  BlowupChart chart = BlowupChart::XT;
  std::pair<Gauss, Gauss> location;
};

struct BlowupNode {
  int id = 0;
  PointRef center;
  Classification center_class;
  /// Components through the center before it was blown up.
  std::vector<int> through;
  BlowupResult result;
  ConservationReport conservation;
};

struct TerminalSingularity {
  PointRef where;
  std::vector<int> components;
  Classification classification;
  MeroField germ;
};

struct ResolutionTree {
  MeroField input;
  std::vector<BlowupNode> nodes;
  std::vector<DivisorComponent> components;
  /// Pairs of component ids meeting at a point.
  std::vector<std::pair<int, int>> edges;
  std::vector<TerminalSingularity> terminals;
  /// Some terminal node had an integer ratio beyond the truncation order.
  bool linearization_undecided = false;

  int blowups() const { return static_cast<int>(nodes.size()); }
  bool dicritical() const;
  const DivisorComponent& component(int id) const { return components.at(static_cast<std::size_t>(id - 1)); }
};

/// Whether a singularity of this type is a center of the reduction.
bool needs_blowup(const Classification& c);

/// Blows up until every remaining singularity is simple (a point with scalar
/// linear part also counts as a center).  With force_first the input is
/// blown up even when it is already simple.
ResolutionTree seidenberg_resolve(const MeroField& germ, int max_blowups = 64, bool force_first = false,
                                  int trunc = 32);

/// Intersection matrix of the components, in id order.
std::vector<std::vector<Rat>> intersection_matrix(const ResolutionTree& tree);
/// Leading principal minors alternate in sign starting negative.
bool negative_definite(const std::vector<std::vector<Rat>>& m);

struct AdaptedPolesReport {
  bool adapted = true;
  std::vector<int> offending_components;
};

/// Each invariant component must carry a pole or a zero of the field.
AdaptedPolesReport adapted_poles(const ResolutionTree& tree);

std::string dual_graph_dot(const ResolutionTree& tree);

}  // namespace folia
