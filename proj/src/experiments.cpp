#include "inls/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace inls {

bool ScenarioConfig::odd_theorem() const {
  switch (theorem_tag) {
    case TheoremTag::thm1_case1:
    case TheoremTag::thm1_case2:
    case TheoremTag::thm1_case3:
      return false;
    default:
      return true;
  }
}

bool ScenarioConfig::subsequence_theorem() const {
  switch (theorem_tag) {
    case TheoremTag::thm1_case1:
    case TheoremTag::thm1_case2:
    case TheoremTag::thm1_case3:
    case TheoremTag::thm_potential_1:
      return true;
    default:
      return false;
  }
}

MorawetzKernel ScenarioConfig::kernel() const {
  switch (model.K_family.tag) {
    case KFamilyTag::K2_pure:
      return MorawetzKernel::absx_minus_b;
    case KFamilyTag::K3_decay:
      return MorawetzKernel::absx_decay;
    case KFamilyTag::K4_decay:
      return MorawetzKernel::alpha4_absx;
    default:
      return MorawetzKernel::xKprime_over_1px;
  }
}

void ScenarioConfig::validate(const GridSpec& grid) const {
  model.validate();
  const KFamilyTag K = model.K_family.tag;
  const Real gap = 2.0 - model.b;
  auto require = [](bool ok, const std::string& msg) {
    if (!ok) throw ConfigError("scenario: " + msg);
  };

  switch (theorem_tag) {
    case TheoremTag::thm1_case1:
      require(K == KFamilyTag::K1_pure, "thm1_case1 requires a K1 family");
      break;
    case TheoremTag::thm1_case2:
      require(K == KFamilyTag::K2_pure, "thm1_case2 requires a K2 family");
      require(model.sigma > gap, "thm1_case2 requires sigma > 2 - b");
      require(epsilon_small.has_value(), "thm1_case2 requires small data");
      break;
    case TheoremTag::thm1_case3:
      require(K == KFamilyTag::K3_decay, "thm1_case3 requires a K3 family");
      require(model.sigma <= gap, "thm1_case3 requires sigma <= 2 - b");
      require(epsilon_small.has_value(), "thm1_case3 requires small data");
      break;
    case TheoremTag::thm_odd_case1:
      require(K == KFamilyTag::K1_pure, "thm_odd_case1 requires a K1 family");
      break;
    case TheoremTag::thm_odd_case2:
      require(K == KFamilyTag::K4_decay, "thm_odd_case2 requires a K4 family");
      require(epsilon_small.has_value(), "thm_odd_case2 requires small data");
      break;
    case TheoremTag::thm_potential_1:
      require(model.mu > 0.0, "thm_potential_1 requires mu > 0");
      require(epsilon_small.has_value(), "thm_potential_1 requires small data");
      require((K == KFamilyTag::K2_pure && model.sigma > gap) ||
                  (K == KFamilyTag::K3_decay && model.sigma <= gap),
              "thm_potential_1 requires (K2, sigma > 2-b) or (K3, sigma <= 2-b)");
      break;
    case TheoremTag::thm_potential_2:
      require(model.mu > 0.0, "thm_potential_2 requires mu > 0");
      require(K == KFamilyTag::K1_pure || K == KFamilyTag::K4_decay,
              "thm_potential_2 requires a K1 or K4 family");
      if (K == KFamilyTag::K4_decay) {
        require(epsilon_small.has_value(),
                "thm_potential_2 with K4 requires small data");
      }
      break;
  }
  if (odd_theorem()) {
    require(initial_family != InitialFamily::gaussian,
            "odd theorems require an odd initial family");
  }
  require(interval_a < interval_b, "empty local interval");
  require(interval_a >= -grid.half_length && interval_b < grid.half_length,
          "local interval must lie inside the box");
  for (Real R : radii) {
    require(R > 0.0 && R <= grid.half_length / 2.0,
            "radii must lie in (0, L/2]");
  }
}

StateField initial_state(const ScenarioConfig& cfg, const GridSpec& grid) {
  const Real a = cfg.initial_center;
  const Real w = cfg.initial_width;
  StateField u0 = make_state(grid, [&](Real x) -> Complex {
    switch (cfg.initial_family) {
      case InitialFamily::odd_gaussian_pair:
        return std::exp(-(x - a) * (x - a) / (w * w)) -
               std::exp(-(x + a) * (x + a) / (w * w));
      case InitialFamily::odd_xgaussian:
        return x * std::exp(-x * x / (w * w));
      case InitialFamily::gaussian:
        return std::exp(-(x - a) * (x - a) / (w * w));
    }
    return 0.0;
  });
  if (cfg.epsilon_small) u0 = scale_to_h1(u0, *cfg.epsilon_small);
  return u0;
}

MorawetzFit fit_bound(const std::vector<MorawetzSample>& averages,
                      BoundForm form, Real b) {
  if (averages.empty()) throw QueryError("fit_bound: empty input");
  const Real p = (form == BoundForm::RT_plus_Rb) ? b : 2.0;
  MorawetzFit fit;
  fit.ratios.reserve(averages.size());
  for (const auto& s : averages) {
    const Real bound = s.R / s.T + std::pow(s.R, -p);
    const Real ratio = s.value / bound;
    fit.ratios.push_back(ratio);
    fit.C = std::max(fit.C, ratio);
  }
  Real lo = std::numeric_limits<Real>::infinity(), hi = 0.0;
  for (Real r : fit.ratios) {
    if (r <= 0.0) continue;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  fit.spread = (hi > 0.0 && std::isfinite(lo)) ? hi / lo : 0.0;

  // ratio stability when T doubles at fixed R
  fit.doubling_change = 1.0;
  for (std::size_t i = 0; i < averages.size(); ++i) {
    for (std::size_t j = 0; j < averages.size(); ++j) {
      if (averages[i].R != averages[j].R) continue;
      if (std::abs(averages[j].T - 2.0 * averages[i].T) > 1e-9) continue;
      const Real a = fit.ratios[i], c = fit.ratios[j];
      if (a <= 0.0 || c <= 0.0) continue;
      fit.doubling_change =
          std::max(fit.doubling_change, std::max(a / c, c / a));
    }
  }
  fit.verified = std::isfinite(fit.spread) && fit.doubling_change < 2.0;
  return fit;
}

Envelope subsequence_scan(const std::vector<std::pair<Real, Real>>& series) {
  if (series.empty()) throw QueryError("subsequence_scan: empty series");
  Envelope env;
  env.values.reserve(series.size());
  Real best = std::numeric_limits<Real>::infinity();
  for (const auto& [t, v] : series) {
    if (v < best) {
      best = v;
      env.candidates.push_back(t);
    }
    env.values.emplace_back(t, best);
  }
  return env;
}

DecayReport run_scenario(const ScenarioConfig& cfg, const SolverConfig& solver,
                         const GridSpec& grid) {
  cfg.validate(grid);

  DiagnosticsConfig diag;
  // Full-limit odd theorems use the bounded weight, the localized ones the
  // R-cutoff weight.
  if (cfg.subsequence_theorem()) {
    diag.weight = cutoff_weight(cfg.radii.empty() ? grid.half_length / 4.0
                                                  : cfg.radii.back());
  } else {
    diag.weight = bounded_weight();
  }
  diag.local_a = cfg.interval_a;
  diag.local_b = cfg.interval_b;
  const MorawetzKernel kern = cfg.kernel();
  if (cfg.radii.empty()) {
    diag.morawetz.push_back({0.0, grid.half_length / 2.0, kern});
  } else {
    for (Real R : cfg.radii) diag.morawetz.push_back({0.0, R, kern});
  }

  SolverConfig run = solver;
  if (cfg.odd_theorem()) run.enforce_odd = true;

  StateField u0 = initial_state(cfg, grid);
  if (cfg.odd_theorem()) u0 = project_odd(u0);

  DecayReport rep;
  Trajectory traj{cfg.model, run, {}, {}};
  try {
    traj = evolve(u0, cfg.model, run,
                  [&](const StateField& u) { return diagnose(u, cfg.model, diag); });
  } catch (const BoundaryContaminationError& err) {
    rep.valid_run = false;
    rep.breach_time = err.breach_time;
    rep.verdict_note = err.what();
    return rep;
  }
  rep.records = traj.records;

  for (const auto& r : rep.records) {
    rep.local_series.emplace_back(r.t, r.l2_local + r.linf_local);
    rep.max_even_norm = std::max(rep.max_even_norm, r.even_norm);
  }
  rep.envelope = subsequence_scan(rep.local_series);
  rep.initial_local = rep.local_series.front().second;
  rep.envelope_final = rep.envelope.values.back().second;

  // running integral of ||u||^2_{H1_alpha} (trapezoid)
  Real cum = 0.0;
  rep.running_h1_alpha.emplace_back(rep.records.front().t, 0.0);
  for (std::size_t i = 1; i < rep.records.size(); ++i) {
    cum += 0.5 * (rep.records[i - 1].h1_alpha + rep.records[i].h1_alpha) *
           (rep.records[i].t - rep.records[i - 1].t);
    rep.running_h1_alpha.emplace_back(rep.records[i].t, cum);
  }
  rep.running_h1_alpha_total = cum;
  const Real T = rep.records.back().t;
  const Real decade_start = T - 0.1 * (T - rep.records.front().t);
  for (std::size_t i = 1; i < rep.running_h1_alpha.size(); ++i) {
    if (rep.running_h1_alpha[i].first >= decade_start) {
      rep.last_decade_increment = cum - rep.running_h1_alpha[i - 1].second;
      break;
    }
  }
  rep.plateau_verdict = rep.last_decade_increment < 0.1 * cum;

  // terminal-window maximum of the local norm (last tenth of the horizon)
  for (const auto& [t, v] : rep.local_series) {
    if (t >= decade_start) {
      rep.terminal_window_max = std::max(rep.terminal_window_max, v);
    }
  }

  // Morawetz averages for every (T, R) pair
  if (!cfg.horizons.empty() && !cfg.radii.empty()) {
    for (std::size_t ri = 0; ri < cfg.radii.size(); ++ri) {
      std::vector<std::pair<Real, Real>> column;
      column.reserve(rep.records.size());
      for (const auto& r : rep.records) {
        column.emplace_back(r.t, r.morawetz[ri]);
      }
      for (Real horizon : cfg.horizons) {
        rep.morawetz_averages.push_back(
            {horizon, cfg.radii[ri], morawetz_average(column, horizon)});
      }
    }
    if (rep.morawetz_averages.size() >= 4) {
      const BoundForm form = (kern == MorawetzKernel::absx_minus_b)
                                 ? BoundForm::RT_plus_Rb
                                 : BoundForm::RT_plus_R2;
      rep.fit = fit_bound(rep.morawetz_averages, form, cfg.model.b);
    }
  }

  // Frozen regression thresholds; the theorems prove limits without rates.
  if (cfg.subsequence_theorem()) {
    rep.decay_verdict = rep.envelope_final < 0.5 * rep.initial_local;
  } else {
    rep.decay_verdict = rep.terminal_window_max < 0.2 * rep.initial_local;
  }
  return rep;
}

Real identity_residual(const StateField& u0, const ModelSpec& model,
                       const SolverConfig& solver, const WeightSpec& weight) {
  DiagnosticsConfig diag;
  diag.weight = weight;
  const Trajectory traj =
      evolve(u0, model, solver,
             [&](const StateField& u) { return diagnose(u, model, diag); });
  const auto& rec = traj.records;
  if (rec.size() < 3) {
    throw QueryError("identity_residual: run too short for a centered stencil");
  }
  Real scale = 0.0;
  for (const auto& r : rec) scale = std::max(scale, std::abs(r.rhs_sum));
  if (scale == 0.0) {
    throw DegenerateInputError("identity_residual: identically zero rhs");
  }
  Real worst = 0.0;
  for (std::size_t i = 1; i + 1 < rec.size(); ++i) {
    const Real dIdt =
        (rec[i + 1].I - rec[i - 1].I) / (rec[i + 1].t - rec[i - 1].t);
    worst = std::max(worst, std::abs(dIdt + rec[i].rhs_sum));
  }
  return worst / scale;
}

}  // namespace inls
