#pragma once

#include "inls/common.hpp"
#include "inls/grid.hpp"

namespace inls {

// Tagged coefficient family for the space-dependent nonlinearity K(x).
// The pure variants evaluate |x|^{-b} times a tail factor and are singular at
// the origin; the mollified variants replace |x| by sqrt(x^2 + eps^2) and are
// smooth everywhere.
enum class KFamilyTag {
  none,      // K identically zero (free / linear runs)
  K1_pure,   // |x|^{-b}, positive, x K' <= 0
  K2_pure,   // s |x|^{-b}
  K3_decay,  // s |x|^{-b} (1+|x|)^{-2+b}
  K4_decay,  // s |x|^{-b} (1+|x|)^{-3}
};

struct CoefficientFamily {
  KFamilyTag tag = KFamilyTag::K1_pure;
  int sign = +1;          // s
  Real epsilon_K = 0.0;   // mollification length; 0 means the pure family
};

enum class PotentialTag { zero, inverse_power, yukawa };

// Derived auxiliary potential V0 fed to the Schroedinger operator:
//   cutoff:  V0 = -|x V'(x)|
//   bounded: V0 = -x (1+|x|) V'(x)
enum class V0Variant { cutoff, bounded };

struct PotentialSpec {
  PotentialTag tag = PotentialTag::zero;
  Real m = 0.0;
  Real n = 0.0;
  V0Variant variant = V0Variant::cutoff;
};

struct ModelSpec {
  Real sigma = 1.0;  // nonlinearity exponent, |u|^{2 sigma}
  Real b = 0.5;      // inhomogeneity decay rate, 0 < b < 1
  Real mu = 0.0;     // potential coupling, >= 0
  CoefficientFamily K_family;
  PotentialSpec V_family;

  void validate() const;
};

Real eval_K(const ModelSpec& model, Real x);
Real eval_K_prime(const ModelSpec& model, Real x);

Real eval_V(const PotentialSpec& pot, Real x);
Real eval_V_prime(const PotentialSpec& pot, Real x);
Real eval_V0(const PotentialSpec& pot, V0Variant variant, Real x);

Array sample_K(const ModelSpec& model, const Array& x);
Array sample_K_prime(const ModelSpec& model, const Array& x);
Array sample_V(const PotentialSpec& pot, const Array& x);
Array sample_V0(const PotentialSpec& pot, V0Variant variant, const Array& x);

// Quadrature value of the condition-(V) moment int |x V'(x)| (1+|x|)^2 dx on
// the grid. Reported, not asserted.
Real potential_moment(const PotentialSpec& pot, const GridSpec& grid);

// K1 class membership at the grid nodes: K > 0 and x K'(x) <= 0 everywhere.
bool satisfies_K1(const ModelSpec& model, const GridSpec& grid);

// |u|^{2 sigma} with the convention 0^{2 sigma} = 0.
inline Real abs_pow_2sigma(Real abs_u, Real sigma) {
  if (abs_u <= 0.0) return 0.0;
  return std::exp(2.0 * sigma * std::log(abs_u));
}

}  // namespace inls
