#include "inls/solver.hpp"

#include <cmath>

#include "inls/spectral.hpp"

namespace inls {

void SolverConfig::validate(const GridSpec& grid) const {
  if (dt <= 0.0) throw ConfigError("solver: dt must be positive");
  if (T_final <= 0.0) throw ConfigError("solver: T_final must be positive");
  if (dt > grid.h() * (1.0 + 1e-12)) {
    throw ConfigError("solver: dt must not exceed the grid spacing h");
  }
  const Real steps = T_final / dt;
  if (std::abs(steps - std::round(steps)) > 1e-6 * steps) {
    throw ConfigError("solver: T_final must be an integer multiple of dt");
  }
  if (observer_stride < 1) throw ConfigError("solver: observer_stride >= 1");
  if (snapshot_stride < 1) throw ConfigError("solver: snapshot_stride >= 1");
  if (tail_abort_threshold <= 0.0 || tail_abort_threshold > 1.0) {
    throw ConfigError("solver: tail_abort_threshold must lie in (0, 1]");
  }
}

namespace {

CArray free_phase(const GridSpec& grid, Real t) {
  const Array k = wavenumbers(grid);
  CArray phase(k.size());
  for (Eigen::Index j = 0; j < k.size(); ++j) {
    phase[j] = std::polar(1.0, -k[j] * k[j] * t);
  }
  return phase;
}

void rotate_nonlinear(CArray& values, const Array& K, const Array& V, Real mu,
                      Real sigma, Real dt) {
  for (Eigen::Index j = 0; j < values.size(); ++j) {
    const Real a = std::abs(values[j]);
    const Real phase = dt * (K[j] * abs_pow_2sigma(a, sigma) + mu * V[j]);
    if (!std::isfinite(phase)) {
      throw NumericalOverflowError("nonlinear step: non-finite phase");
    }
    values[j] *= std::polar(1.0, -phase);
  }
}

}  // namespace

StateField linear_halfstep(const StateField& u, Real dt) {
  StateField out = u;
  out.values = apply_multiplier(u.values, free_phase(u.grid, 0.5 * dt));
  out.t = u.t + 0.5 * dt;
  return out;
}

StateField nonlinear_fullstep(const StateField& u, const ModelSpec& model,
                              Real dt) {
  StateField out = u;
  const Array x = u.grid.nodes();
  const Array K = sample_K(model, x);
  const Array V = (model.mu != 0.0) ? sample_V(model.V_family, x)
                                    : Array::Zero(x.size());
  rotate_nonlinear(out.values, K, V, model.mu, model.sigma, dt);
  return out;
}

StateField strang_step(const StateField& u, const ModelSpec& model, Real dt) {
  StateField out = linear_halfstep(u, dt);
  out = nonlinear_fullstep(out, model, dt);
  out = linear_halfstep(out, dt);
  out.t = u.t + dt;
  return out;
}

Trajectory evolve(const StateField& u0, const ModelSpec& model,
                  const SolverConfig& cfg, const Recorder& recorder) {
  cfg.validate(u0.grid);
  model.validate();

  StateField u = u0;
  if (cfg.enforce_odd) {
    const Real norm = std::sqrt(mass(u));
    if (norm > 0.0 && even_part_norm(u) > 1e-12 * norm) {
      throw ConfigError("evolve: enforce_odd requires odd initial data");
    }
    u = project_odd(u);
  }

  const int nsteps = static_cast<int>(std::round(cfg.T_final / cfg.dt));
  const Array x = u.grid.nodes();
  const Array K = sample_K(model, x);
  const Array V = (model.mu != 0.0) ? sample_V(model.V_family, x)
                                    : Array::Zero(x.size());
  const CArray half = free_phase(u.grid, 0.5 * cfg.dt);

  Trajectory traj{model, cfg, {}, {}};
  auto observe = [&](const StateField& s, int record_index) {
    if (!s.all_finite()) {
      throw NumericalOverflowError("evolve: non-finite state at t = " +
                                   std::to_string(s.t));
    }
    const Real tail = tail_mass(s, 0.1);
    if (tail > cfg.tail_abort_threshold) {
      throw BoundaryContaminationError(
          "evolve: tail mass breach at t = " + std::to_string(s.t), s.t);
    }
    traj.records.push_back(recorder(s));
    if (record_index % cfg.snapshot_stride == 0) {
      traj.snapshots.emplace_back(s.t, s);
    }
  };

  observe(u, 0);

  CArray v = fft(u.values);
  int record_index = 0;
  for (int step = 1; step <= nsteps; ++step) {
    v *= half;
    CArray phys = ifft(v);
    rotate_nonlinear(phys, K, V, model.mu, model.sigma, cfg.dt);
    v = fft(phys);
    v *= half;
    if (step % cfg.observer_stride == 0 || step == nsteps) {
      u.values = ifft(v);
      u.t = u0.t + step * cfg.dt;
      if (cfg.enforce_odd) {
        // roundoff-scale drift suppression at observer cadence only
        u = project_odd(u);
        v = fft(u.values);
      }
      observe(u, ++record_index);
    }
  }
  return traj;
}

}  // namespace inls
