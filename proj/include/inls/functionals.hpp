#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "inls/common.hpp"
#include "inls/model.hpp"
#include "inls/state.hpp"
#include "inls/weights.hpp"

namespace inls {

// Rectangle-rule quadrature h * sum(samples); spectrally accurate for smooth
// periodic integrands on the staggered grid.
Real quadrature(const Array& samples, const GridSpec& grid);

StateField spectral_derivative(const StateField& u);

Real mass(const StateField& u);

struct EnergyBreakdown {
  Real kinetic = 0.0;    // int |u_x|^2
  Real nonlinear = 0.0;  // (sigma+1)^{-1} int K |u|^{2 sigma + 2}
  Real potential = 0.0;  // mu int V |u|^2
  Real total() const { return kinetic + nonlinear + potential; }
};
EnergyBreakdown energy(const StateField& u, const ModelSpec& model);

// Virial functional I(u) = Im int phi u conj(u_x) dx.
Real virial(const StateField& u, const WeightSpec& w);

// The separately integrated terms of the Virial identity, signed so that
// sum() equals -dI/dt in the continuum:
//   sum = 2 int phi_x |u_x|^2  -  1/2 int phi_xxx |u|^2
//         - (2/(2s+2) - 1) int phi_x K |u|^{2s+2}
//         - 2/(2s+2) int phi K' |u|^{2s+2}
//         - mu int phi V' |u|^2.
// For the bounded weight the phi_xxx term uses 6/(1+|x|)^4 (odd solutions).
struct VirialTerms {
  Real kinetic = 0.0;
  Real phi3 = 0.0;
  Real K_phi_x = 0.0;
  Real K_prime = 0.0;
  Real potential = 0.0;
  Real sum() const { return kinetic + phi3 + K_phi_x + K_prime + potential; }
};
VirialTerms virial_rhs(const StateField& u, const ModelSpec& model,
                       const WeightSpec& w);

// || u ||^2 with the weight alpha(x) = (1+|x|)^{-4} on both u and u_x.
Real weighted_h1(const StateField& u, const WeightSpec& alpha);

// (L2, Linf) over grid nodes inside [a, b].
std::pair<Real, Real> local_norms(const StateField& u, Real a, Real b);

// Mass fraction in the outer `fraction` of the box; 0 for the zero field.
Real tail_mass(const StateField& u, Real fraction);

// int |x|^{-b} |u|^{6-2b} dx / (||u_x||^2 ||u||^{4-2b}); the interpolation
// inequality asserts this is bounded uniformly in u.
Real gn_ratio(const StateField& u, Real b);

enum class MorawetzKernel {
  xKprime_over_1px,  // |x K'(x)| / (1+|x|), all x
  absx_minus_b,      // |x|^{-b}, |x| <= R
  absx_decay,        // |x|^{-b} (1+|x|)^{-2+b}, |x| <= R
  alpha4_absx,       // |x|^{-b} (1+|x|)^{-4}, all x
};

struct MorawetzQuery {
  Real T = 0.0;
  Real R = 0.0;
  MorawetzKernel kernel = MorawetzKernel::absx_minus_b;
};

// Spatial integral of kernel * |u|^{2 sigma + 2} for one snapshot.
Real morawetz_integrand(const StateField& u, const ModelSpec& model,
                        MorawetzKernel kernel, Real R);

// (1/T) * trapezoid over t in [0, T] of a recorded integrand series.
Real morawetz_average(const std::vector<std::pair<Real, Real>>& series, Real T);

// Per-snapshot functional values recorded along a trajectory.
struct DiagnosticsRecord {
  Real t = 0.0;
  Real mass = 0.0;
  Real energy = 0.0;
  Real I = 0.0;
  Real rhs_sum = 0.0;
  Real rhs_kinetic = 0.0;
  Real rhs_phi3 = 0.0;
  Real rhs_K1 = 0.0;
  Real rhs_K2 = 0.0;
  Real rhs_V = 0.0;
  Real h1_alpha = 0.0;
  Real l2_local = 0.0;
  Real linf_local = 0.0;
  Real tail_mass_fraction = 0.0;
  // Not part of the CSV schema:
  Real even_norm = 0.0;
  std::vector<Real> morawetz;  // one entry per configured kernel
};

struct DiagnosticsConfig {
  std::optional<WeightSpec> weight;  // weight for I and the identity terms
  Real local_a = -2.0, local_b = 2.0;
  Real tail_fraction = 0.1;
  std::vector<MorawetzQuery> morawetz;  // only kernel and R are used here
};

DiagnosticsRecord diagnose(const StateField& u, const ModelSpec& model,
                           const DiagnosticsConfig& cfg);

}  // namespace inls
