#pragma once

#include <optional>
#include <string>
#include <vector>

#include "inls/common.hpp"
#include "inls/functionals.hpp"
#include "inls/model.hpp"
#include "inls/solver.hpp"

namespace inls {

enum class TheoremTag {
  thm1_case1,      // K1, any sigma, subsequence decay
  thm1_case2,      // K2, sigma > 2-b, small data
  thm1_case3,      // K3, sigma <= 2-b, small data
  thm_odd_case1,   // K1, odd data, full-limit decay
  thm_odd_case2,   // K4, odd small data, full-limit decay
  thm_potential_1, // mu > 0, odd small data, condition (1), liminf decay
  thm_potential_2, // mu > 0, odd data, condition (2), full-limit decay
};

enum class InitialFamily {
  odd_gaussian_pair,  // e^{-(x-a)^2/w^2} - e^{-(x+a)^2/w^2}
  odd_xgaussian,      // x e^{-x^2/w^2}
  gaussian,           // e^{-(x-a)^2/w^2}, thm1 only
};

struct ScenarioConfig {
  TheoremTag theorem_tag = TheoremTag::thm_odd_case1;
  ModelSpec model;
  InitialFamily initial_family = InitialFamily::odd_gaussian_pair;
  Real initial_center = 1.0;
  Real initial_width = 1.0;
  std::optional<Real> epsilon_small;  // target H1 norm for small-data cases
  Real interval_a = -2.0, interval_b = 2.0;
  std::vector<Real> horizons;  // Morawetz averaging horizons T
  std::vector<Real> radii;     // Morawetz localization radii R

  // Checks the theorem's hypotheses as encoded above; throws ConfigError.
  void validate(const GridSpec& grid) const;

  bool odd_theorem() const;
  bool subsequence_theorem() const;
  MorawetzKernel kernel() const;  // kernel matching the K family
};

struct MorawetzFit {
  Real C = 0.0;
  std::vector<Real> ratios;  // value / form, aligned with the input pairs
  Real spread = 0.0;         // max ratio / min ratio (over nonzero entries)
  Real doubling_change = 0.0;  // max ratio change under T-doubling at fixed R
  bool verified = false;
};

struct MorawetzSample {
  Real T = 0.0, R = 0.0, value = 0.0;
};

enum class BoundForm { RT_plus_Rb, RT_plus_R2 };

MorawetzFit fit_bound(const std::vector<MorawetzSample>& averages,
                      BoundForm form, Real b);

struct Envelope {
  std::vector<std::pair<Real, Real>> values;  // running minimum of the series
  std::vector<Real> candidates;               // times achieving new minima
};

Envelope subsequence_scan(const std::vector<std::pair<Real, Real>>& series);

struct DecayReport {
  std::vector<DiagnosticsRecord> records;
  std::vector<std::pair<Real, Real>> local_series;  // t, L2(I) + Linf(I)
  Envelope envelope;
  std::vector<std::pair<Real, Real>> running_h1_alpha;  // cumulative integral
  Real running_h1_alpha_total = 0.0;
  Real last_decade_increment = 0.0;
  std::vector<MorawetzSample> morawetz_averages;
  std::optional<MorawetzFit> fit;
  Real initial_local = 0.0;
  Real terminal_window_max = 0.0;  // over the last tenth of the horizon
  Real envelope_final = 0.0;
  Real max_even_norm = 0.0;
  bool decay_verdict = false;
  bool plateau_verdict = false;
  bool valid_run = true;
  Real breach_time = 0.0;
  std::string verdict_note;
};

DecayReport run_scenario(const ScenarioConfig& cfg, const SolverConfig& solver,
                         const GridSpec& grid);

// Largest relative residual of the centered-difference dI/dt against the
// recorded rhs sum (which carries the -dI/dt sign) over a short evolution.
// The residual is measured relative to the peak |rhs sum| of the run.
Real identity_residual(const StateField& u0, const ModelSpec& model,
                       const SolverConfig& solver, const WeightSpec& weight);

StateField initial_state(const ScenarioConfig& cfg, const GridSpec& grid);

}  // namespace inls
