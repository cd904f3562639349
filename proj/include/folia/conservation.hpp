#pragma once

#include <string>
#include <utility>
#include <vector>

#include "folia/blowup.hpp"

namespace folia {

struct LawCheck {
  std::string law;
  std::vector<std::pair<std::string, Gauss>> summands;
  Gauss total;
  Gauss expected;
  bool applicable = true;
  bool pass = false;
};

struct ConservationReport {
  std::vector<LawCheck> laws;
  bool complete = true;
  bool pass() const;
};

/// The exceptional divisor as a witness curve at a divisor singularity.
CurveWitness divisor_witness(const DivisorSingularity& d);

/// Sum laws over the exceptional divisor: multiplicities add to ord + 1,
/// indices add to -1 and, for semi-complete candidates, asymptotic orders add to 2.
ConservationReport check_conservation(const MeroField& parent, const BlowupResult& blowup,
                                      bool semicomplete_candidate = false, int trunc = 32);

}  // namespace folia
