#pragma once

#include <vector>

#include "inls/common.hpp"
#include "inls/grid.hpp"
#include "inls/model.hpp"
#include "inls/state.hpp"

namespace inls {

enum class Parity { even, odd, indeterminate };

// Spectral data of -d^2/dx^2 + mu V0 on [-L, L] with Dirichlet walls,
// three-point finite differences, Sturm-sequence counting, and two-grid
// Richardson extrapolation of the lowest eigenvalue.
struct EigenReport {
  Real mu = 0.0;
  Real lowest_eigenvalue = 0.0;  // extrapolated; 0 when no negative spectrum
  Real lowest_coarse = 0.0;
  Real lowest_fine = 0.0;
  int negative_count = 0;
  Parity ground_state_parity = Parity::indeterminate;
  Real moment_integral = 0.0;  // quadrature of int V0 dx
  Real mu0_estimate = 0.0;     // largest tested coupling with <= 1 bound state
};

// V0 sampled on the staggered nodes of `grid`.
EigenReport lowest_eigenvalue(const Array& V0_samples, Real mu,
                              const GridSpec& grid);

// Sweep over couplings with V0 derived from the potential family.
std::vector<EigenReport> simon_klaus_check(const PotentialSpec& pot,
                                           V0Variant variant,
                                           const std::vector<Real>& mu_list,
                                           const GridSpec& grid);

enum class FormKind { B, B_V };

// Quadratic forms on real-valued odd fields:
//   B(w)   = -1/2 int 6 (1+|x|)^{-4} |w|^2 + 2 int (1+|x|)^{-2} |w_x|^2
//   B_V(w) = B(w) - mu int x V'(x) / (1+|x|) |w|^2
// with the split B_V = H + J,
//   H(w) = -3 int (1+|x|)^{-4} |w|^2 - int [((1+|x|)^{-1} w)_x]^2
//          + 2 int (1+|x|)^{-2} |w_x|^2
//   J(w) = int [((1+|x|)^{-1} w)_x]^2
//          - mu int x (1+|x|) V'(x) |(1+|x|)^{-1} w|^2
Real quadratic_form(const StateField& w, FormKind form,
                    const PotentialSpec& pot, Real mu);
Real form_H(const StateField& w);
Real form_J(const StateField& w, const PotentialSpec& pot, Real mu);

struct CoercivityReport {
  FormKind form = FormKind::B;
  int sample_count = 0;
  Real min_ratio = 0.0;
  Real min_J = 0.0;  // smallest J-term over the suite (B_V only)
  std::vector<int> failures;  // sample indices with ratio <= 0
  bool empty = false;
};

CoercivityReport coercivity_sweep(FormKind form, const PotentialSpec& pot,
                                  Real mu, int sample_count, unsigned seed,
                                  const GridSpec& grid);

}  // namespace inls
