#pragma once

#include <string>
#include <utility>
#include <vector>

#include "folia/local_invariants.hpp"

namespace folia {

/// The two standard charts of a point blow-up: (x, t) -> (x, tx) and (s, y) -> (sy, y).
enum class BlowupChart { XT, SY };
std::string to_string(BlowupChart c);

struct DivisorSingularity {
  BlowupChart chart = BlowupChart::XT;
  std::pair<Gauss, Gauss> location;
  Classification classification;
  /// Total transform recentred at the point; the divisor is {x = 0} in XT
  /// and {y = 0} in SY.
  MeroField germ;
};

struct BlowupResult {
  MeroField chart_xt;
  MeroField chart_sy;
  int center_order = 0;
  int exceptional_order = 0;
  bool dicritical = false;
  std::vector<DivisorSingularity> divisor_singularities;
  bool complete = true;
  std::string unresolved;
};

/// ord(f) + ord(F) - ord(g) - 1 for the germ (f/g) Z.
int predicted_exceptional_order(const MeroField& germ);

BlowupResult blow_up(const MeroField& germ, bool allow_regular = false, int trunc = 32);

/// Whether blowing either chart back down reproduces the original germ.
bool blow_down_check(const BlowupResult& result, const MeroField& original);

}  // namespace folia
