#pragma once

#include <functional>
#include <vector>

#include "inls/common.hpp"
#include "inls/functionals.hpp"
#include "inls/model.hpp"
#include "inls/state.hpp"

namespace inls {

struct SolverConfig {
  Real dt = 1e-3;
  Real T_final = 1.0;
  bool enforce_odd = false;
  int observer_stride = 10;
  Real tail_abort_threshold = 1e-8;  // set to 1.0 to disable the abort
  int snapshot_stride = 1;           // keep every k-th observer snapshot

  void validate(const GridSpec& grid) const;
};

struct Trajectory {
  ModelSpec model;
  SolverConfig solver;
  std::vector<std::pair<Real, StateField>> snapshots;
  std::vector<DiagnosticsRecord> records;
};

// Free flow over dt/2: every Fourier mode picks up the phase e^{-i k^2 dt/2}.
StateField linear_halfstep(const StateField& u, Real dt);

// Exact pointwise nonlinear flow over dt: phase rotation by
// -dt (K(x_j) |u_j|^{2 sigma} + mu V(x_j)); |u_j| is invariant.
StateField nonlinear_fullstep(const StateField& u, const ModelSpec& model,
                              Real dt);

StateField strang_step(const StateField& u, const ModelSpec& model, Real dt);

using Recorder = std::function<DiagnosticsRecord(const StateField&)>;

// Strang-split evolution with diagnostics at observer strides. Aborts with
// BoundaryContaminationError when the tail-mass fraction breaches the
// configured threshold, and with NumericalOverflowError on non-finite values.
Trajectory evolve(const StateField& u0, const ModelSpec& model,
                  const SolverConfig& cfg, const Recorder& recorder);

}  // namespace inls
