#include "folia/conservation.hpp"

namespace folia {

bool ConservationReport::pass() const {
  if (!complete) return false;
  for (const auto& l : laws) {
    if (l.applicable && !l.pass) return false;
  }
  return true;
}

CurveWitness divisor_witness(const DivisorSingularity& d) {
  return d.chart == BlowupChart::XT ? CurveWitness::x_axis_zero() : CurveWitness::y_axis_zero();
}

ConservationReport check_conservation(const MeroField& parent, const BlowupResult& blowup, bool semicomplete_candidate,
                                      int trunc) {
  ConservationReport out;
  out.complete = blowup.complete;
  LawCheck ord{"order_sum", {}, Gauss(0), Gauss(parent.foliation_order() + 1)};
  LawCheck ind{"index_sum", {}, Gauss(0), Gauss(-1)};
  LawCheck asy{"asymptotic_sum", {}, Gauss(0), Gauss(2)};
  asy.applicable = semicomplete_candidate;
  if (blowup.dicritical) {
    ord.applicable = ind.applicable = asy.applicable = false;
  } else {
    for (const auto& d : blowup.divisor_singularities) {
      InvariantValues v = invariants_along(d.germ, divisor_witness(d), trunc);
      std::string where = to_string(d.chart) + ":(" + to_string(d.location.first) + "," + to_string(d.location.second) + ")";
      ord.summands.emplace_back(where, Gauss(v.multiplicity));
      ind.summands.emplace_back(where, v.index);
      asy.summands.emplace_back(where, v.asymptotic_order);
      ord.total += Gauss(v.multiplicity);
      ind.total += v.index;
      asy.total += v.asymptotic_order;
    }
  }
  for (LawCheck* l : {&ord, &ind, &asy}) {
    l->pass = l->applicable && out.complete && l->total == l->expected;
    out.laws.push_back(*l);
  }
  return out;
}

}  // namespace folia
