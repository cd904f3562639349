#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folia/blowup.hpp"

namespace folia {

enum class ScStatus { SEMICOMPLETE, NOT_SEMICOMPLETE, CONDITIONAL, UNKNOWN };
std::string to_string(ScStatus s);

struct ScVerdict {
  ScStatus status = ScStatus::UNKNOWN;
  /// Identifier of the rule that fired ("obsidiota", "le3.1", "selano.2", ...).
  std::string rule;
  std::string reason;
};

/// One-variable germ x^shift * f(x) d/dx.
ScVerdict sc_1d_germ(const UniPoly& f, int shift = 0);

struct Residue {
  Gauss point;
  Gauss value;
};

struct TimeformResidues {
  std::vector<Residue> residues;
  /// Index sets (into residues) of nonzero residues whose sum vanishes.
  std::vector<std::vector<std::size_t>> zero_sum_subsets;
};

/// Residues of dT = dx / f along an invariant curve on which the field restricts to f d/dx.
TimeformResidues timeform_residues(const MeroField& germ, const CurveWitness& line);

/// Obstruction test for P (x d/dx - (n/m) y d/dy) with P = num/den homogeneous.
ScVerdict check_le31(const BiPoly& num, const BiPoly& den, long m, long n);

/// A meromorphic germ at a non-degenerate singularity whose eigenvalue ratio is not rational.
ScVerdict check_le32(const MeroField& germ);

/// Filter on resonant nodes that are not linearizable, including LJ: only ratio 1
/// survives, with a simple pole along the separatrix and a smooth transverse zero.
ScVerdict check_le33(const MeroField& germ);

enum class SelanoForm { FORM1, FORM2, FORM3_CONDITIONAL, NONE };
std::string to_string(SelanoForm f);

struct SaddleNodeData {
  int p = 0;
  /// Pole order along the strong invariant manifold.
  int k = 0;
  /// Direction of the nonzero eigenvalue.
  std::pair<Gauss, Gauss> strong_direction;
  /// The strong manifold when it is a polar curve given by a line or a graph.
  std::optional<CurveWitness> strong_manifold;
  SelanoForm form = SelanoForm::NONE;
  ScVerdict verdict;
};

SaddleNodeData classify_saddle_node(const MeroField& germ);

enum class ModelKind { NONE, Z_1_11, Z_0_12, Z_1_00 };
std::string to_string(ModelKind k);

/// A divisor point seen from the exceptional curve after one blow-up.
struct ModelPoint {
  BlowupChart chart = BlowupChart::XT;
  std::pair<Gauss, Gauss> location;
  SingularityType type = SingularityType::REGULAR;
  Gauss along;       // eigenvalue tangent to the divisor
  Gauss transverse;  // eigenvalue transverse to it
  /// Order of the field along the separatrix transverse to the divisor
  /// (strict transform of a coordinate axis), 0 when there is none.
  int transverse_order = 0;
  /// Tower level of a recognized non-simple point, -1 when simple.
  int nested_level = -1;
};

struct ModelTag {
  ModelKind kind = ModelKind::NONE;
  /// 0 for the base model, n for the n-th collapse of the tower.
  int level = 0;
  int divisor_order = 0;
  /// The integer d of the model description.
  int d = 0;
  /// Pole order along the strong separatrix that the next collapse turns into the divisor.
  int s1_pole = 0;
  std::vector<ModelPoint> points;
  std::string reason;

  std::string tag() const;
  /// "prop4.2.Z111" for base models, "tower.n" above.
  std::string rule() const;
};

ModelTag recognize_model(const MeroField& germ, int max_level = 8, int trunc = 32);

}  // namespace folia
