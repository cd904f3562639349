#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folia/projective_charts.hpp"
#include "folia/resolution.hpp"
#include "folia/semicomplete.hpp"

namespace folia {

enum class VerdictStatus { COMPLETE_MODEL, NOT_COMPLETE, INCONCLUSIVE };
std::string to_string(VerdictStatus s);

struct CertificateStep {
  std::string rule;
  ChartId chart = ChartId::AFFINE;
  std::pair<Gauss, Gauss> location;
  /// Rule-specific facts as printable key/value pairs.
  std::vector<std::pair<std::string, std::string>> data;
};

/// Form 1 is P(y) x^epsilon Dx, form 2 is c x^n y^m (m x Dx - n y Dy).
struct NormalForm {
  int form = 0;
  int epsilon = 0;
  UniPoly p;
  long n = 0;
  long m = 0;
  Gauss scale{1};
};

struct Verdict {
  VerdictStatus status = VerdictStatus::INCONCLUSIVE;
  std::vector<CertificateStep> certificate;
  std::optional<NormalForm> theorem_a_form;
};

/// Item of the list of admissible top components; item 0 means no item matched.
struct TopComponentClass {
  int item = 0;
  long a = 0;
  long n = 0;
  long m = 0;
  long i = 0;
  long j = 0;
  /// False when the invariant lines leave Q(i), so no item could be tested.
  bool decided = true;
  std::string reason;
};

/// Requires degree >= 2 and the line at infinity invariant.
TopComponentClass classify_top_component(const PolyVectorField& x);

std::optional<NormalForm> normal_form_match(const PolyVectorField& x);

struct LineObstruction {
  /// "escape" (finite-time escape) or "obsidiota" (not semicomplete).
  std::string rule;
  std::pair<Gauss, Gauss> point;
  std::pair<Gauss, Gauss> direction;
  /// X(point + t direction) = restriction(t) direction.
  UniPoly restriction;
  /// Parameter t of the high-order zero, for "obsidiota".
  Gauss zero;
};

/// Obstruction carried by the line through point along direction, if the line is invariant.
std::optional<LineObstruction> line_obstruction(const PolyVectorField& x, const std::pair<Gauss, Gauss>& point,
                                                const std::pair<Gauss, Gauss>& direction);

/// Searches axis-parallel lines and tangent-cone lines through singular points.
std::optional<LineObstruction> invariant_line_escape(const PolyVectorField& x);

struct PipelineOptions {
  int trunc = 32;
  int max_blowups = 64;
  bool parallel = true;
};

Verdict completeness_verdict(const PolyVectorField& x, const PipelineOptions& opt = {});

/// Re-runs the rule cited by the last step of a NOT_COMPLETE certificate.
bool replay_certificate(const PolyVectorField& x, const Verdict& v, const PipelineOptions& opt = {});

}  // namespace folia
