#pragma once

#include "inls/common.hpp"

namespace inls {

enum class WeightKind {
  cutoff_R,  // odd cutoff: x on |x| <= R/2, +-R beyond R, smooth in between
  bounded,   // x / (1 + |x|)
  psi,       // (1 + |x|)^{-4}
  alpha,     // (1 + |x|)^{-4}
};

struct WeightSpec {
  WeightKind kind = WeightKind::bounded;
  Real R = 0.0;  // cutoff radius, cutoff_R only

  void validate() const;
};

// Smooth step eta(t) = e^{-1/t} / (e^{-1/t} + e^{-1/(1-t)}) on (0,1),
// 0 below, 1 above. Returns the value and first three derivatives.
struct EtaJet {
  Real v = 0.0, d1 = 0.0, d2 = 0.0, d3 = 0.0;
};
EtaJet eta_jet(Real t);
Real eta(Real t);

// Pointwise weight evaluation; derivative_order in {0,1,2,3}. The bounded
// weight is C^1 only: derivative orders >= 2 at x = 0 are rejected.
Real eval_phi(const WeightSpec& w, Real x, int derivative_order);

// sup |phi|: R for the cutoff weight, 1 otherwise.
Real phi_sup(const WeightSpec& w);

inline WeightSpec cutoff_weight(Real R) {
  return WeightSpec{WeightKind::cutoff_R, R};
}
inline WeightSpec bounded_weight() { return WeightSpec{WeightKind::bounded}; }
inline WeightSpec alpha_weight() { return WeightSpec{WeightKind::alpha}; }
inline WeightSpec psi_weight() { return WeightSpec{WeightKind::psi}; }

}  // namespace inls
