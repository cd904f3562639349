#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folia/mero_field.hpp"

namespace folia {

enum class RatioClass { BOTH_ZERO, SADDLE_NODE, RATIONAL_RATIO, IRRATIONAL_OR_NONREAL };

/// Linear part of the core at the origin.
struct EigenData {
  Gauss trace;
  Gauss det;
  bool jordan_nontrivial = false;
  RatioClass ratio_class = RatioClass::BOTH_ZERO;
  /// ratio = p/q with |p/q| >= 1, filled for RATIONAL_RATIO
  long p = 0;
  long q = 1;
  /// Eigenvalues when they lie in Q(i), the second of larger modulus.
  std::optional<Gauss> lambda1;
  std::optional<Gauss> lambda2;
};

enum class SingularityType {
  REGULAR,
  SIMPLE_HYPERBOLIC,
  SADDLE_NODE,
  LJ,
  NILPOTENT,
  ZERO_LINEAR_PART,
  DICRITICAL_LINEARIZABLE
};

std::string to_string(RatioClass c);
std::string to_string(SingularityType t);

/// Nonzero eigenvalue present.
bool is_simple(SingularityType t);

EigenData eigen_data(const MeroField& germ);

struct Classification {
  SingularityType type = SingularityType::REGULAR;
  EigenData eigen;
  /// A positive integer ratio beyond the truncation order was not decided.
  bool linearization_undecided = false;
};

Classification classify_singularity(const MeroField& germ, int trunc = 32);

/// Smooth curve through the origin with a polynomial automorphism
/// (x, y) -> (map_x, map_y) that carries {y = 0} onto it.
struct CurveWitness {
  BiPoly curve;
  BiPoly map_x;
  BiPoly map_y;

  static CurveWitness y_axis_zero();  // {y = 0}
  static CurveWitness x_axis_zero();  // {x = 0}
  /// {a x + b y = 0}
  static CurveWitness line(const Gauss& a, const Gauss& b);
  /// {y = h(x)} with h(0) = 0
  static CurveWitness graph(const UniPoly& h);
};

/// The germ in coordinates where the witness curve is {y = 0};
/// throws when the curve is not invariant or not smooth at the origin.
MeroField straighten(const MeroField& germ, const CurveWitness& w);

int multiplicity_along(const MeroField& germ, const CurveWitness& w);
Gauss index_along(const MeroField& germ, const CurveWitness& w, int trunc = 32);
Gauss asymptotic_order(const MeroField& germ, const CurveWitness& w, int trunc = 32);
std::optional<int> milnor_number(const MeroField& germ);

struct InvariantValues {
  int multiplicity = 0;
  Gauss index;
  Gauss asymptotic_order;
  std::optional<int> milnor;
};

InvariantValues invariants_along(const MeroField& germ, const CurveWitness& w, int trunc = 32);

}  // namespace folia
