// Command-line front end: one binary, six subcommands.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "inls/experiments.hpp"
#include "inls/io.hpp"
#include "inls/operators.hpp"
#include "inls/random_fields.hpp"

namespace fs = std::filesystem;
using namespace inls;

namespace {

constexpr const char* kVersion = "inls 0.1.0";

constexpr int kExitPass = 0;
constexpr int kExitError = 1;
constexpr int kExitVerdict = 2;

PotentialSpec make_potential(const std::string& family, Real m, Real n,
                             const std::string& variant) {
  PotentialSpec pot;
  if (family == "zero") {
    pot.tag = PotentialTag::zero;
  } else if (family == "inverse_power") {
    pot.tag = PotentialTag::inverse_power;
  } else if (family == "yukawa") {
    pot.tag = PotentialTag::yukawa;
  } else {
    throw ConfigError("unknown potential family \"" + family + "\"");
  }
  pot.m = m;
  pot.n = n;
  if (variant == "cutoff") {
    pot.variant = V0Variant::cutoff;
  } else if (variant == "bounded") {
    pot.variant = V0Variant::bounded;
  } else {
    throw ConfigError("variant must be \"cutoff\" or \"bounded\"");
  }
  return pot;
}

struct SimulateOutcome {
  DecayReport report;
  nlohmann::json config;
};

SimulateOutcome run_simulate_job(const std::string& config_path,
                                 const fs::path& out_dir) {
  const auto t0 = std::chrono::steady_clock::now();
  auto [scenario, solver, grid] = parse_config(config_path);
  SimulateOutcome out;
  out.config = config_to_json(scenario, solver, grid);
  out.report = run_scenario(scenario, solver, grid);

  fs::create_directories(out_dir);
  const fs::path csv = out_dir / "timeseries.csv";
  write_timeseries(out.report.records, csv.string());

  RunManifest manifest;
  manifest.config = out.config;
  manifest.code_version = kVersion;
  manifest.wall_seconds =
      std::chrono::duration<Real>(std::chrono::steady_clock::now() - t0)
          .count();
  manifest.outputs.emplace_back(csv.string(), hash_file(csv.string()));
  manifest.tail_breach = !out.report.valid_run;
  write_manifest(manifest, (out_dir / "manifest.json").string());
  return out;
}

void print_report(const DecayReport& rep) {
  if (!rep.valid_run) {
    std::cout << "run invalid: " << rep.verdict_note << " (t = "
              << format_real(rep.breach_time) << ")\n";
    return;
  }
  std::cout << "records            " << rep.records.size() << "\n"
            << "initial local norm " << format_real(rep.initial_local) << "\n"
            << "envelope final     " << format_real(rep.envelope_final) << "\n"
            << "terminal-window max " << format_real(rep.terminal_window_max)
            << "\n"
            << "running H1_alpha   " << format_real(rep.running_h1_alpha_total)
            << " (last decade " << format_real(rep.last_decade_increment)
            << ")\n"
            << "max even-part norm " << format_real(rep.max_even_norm) << "\n"
            << "decay verdict      " << (rep.decay_verdict ? "pass" : "fail")
            << "\n"
            << "plateau verdict    " << (rep.plateau_verdict ? "pass" : "fail")
            << "\n";
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir) {
  const SimulateOutcome out = run_simulate_job(config_path, out_dir);
  print_report(out.report);
  if (!out.report.valid_run) return kExitError;
  return out.report.decay_verdict ? kExitPass : kExitVerdict;
}

int cmd_eigen(const std::string& family, Real m, Real n,
              const std::string& variant, std::vector<Real> mu_list, Real L,
              int N) {
  const PotentialSpec pot = make_potential(family, m, n, variant);
  const GridSpec grid = make_grid(L, N);
  if (mu_list.empty()) mu_list = {0.01};
  const auto reports = simon_klaus_check(pot, pot.variant, mu_list, grid);
  std::cout << "mu,lowest_eigenvalue,negative_count,parity,moment,mu0_estimate\n";
  for (const auto& r : reports) {
    const char* parity = r.ground_state_parity == Parity::even    ? "even"
                         : r.ground_state_parity == Parity::odd   ? "odd"
                                                                  : "n/a";
    std::cout << format_real(r.mu) << ',' << format_real(r.lowest_eigenvalue)
              << ',' << r.negative_count << ',' << parity << ','
              << format_real(r.moment_integral) << ','
              << format_real(r.mu0_estimate) << "\n";
  }
  return kExitPass;
}

Real parse_mollify(const std::string& text, Real h) {
  // Either an absolute length ("0.04") or a multiple of the grid spacing
  // ("4h").
  if (!text.empty() && text.back() == 'h') {
    return std::stod(text.substr(0, text.size() - 1)) * h;
  }
  return std::stod(text);
}

int cmd_verify_identity(const std::string& weight_name, Real R,
                        const std::string& mollify, Real dt, Real T, Real L,
                        int N, Real sigma, Real b, Real mu,
                        const std::string& v_family, Real v_m, Real v_n) {
  const GridSpec grid = make_grid(L, N);
  WeightSpec weight =
      weight_name == "bounded" ? bounded_weight() : cutoff_weight(R);
  weight.validate();

  ModelSpec model;
  model.sigma = sigma;
  model.b = b;
  model.mu = mu;
  model.K_family = {KFamilyTag::K1_pure, +1, parse_mollify(mollify, grid.h())};
  if (mu > 0.0) model.V_family = make_potential(v_family, v_m, v_n, "bounded");
  model.validate();

  StateField u0 = make_state(grid, [](Real x) {
    return std::exp(-(x - 1.0) * (x - 1.0)) - std::exp(-(x + 1.0) * (x + 1.0));
  });
  u0 = project_odd(u0);

  std::cout << "dt,max_rel_residual\n";
  std::vector<Real> residuals;
  for (const Real step : {dt, dt / 2.0}) {
    SolverConfig solver;
    solver.dt = step;
    solver.T_final = T;
    solver.enforce_odd = true;
    solver.tail_abort_threshold = 1.0;
    const Real r = identity_residual(u0, model, solver, weight);
    residuals.push_back(r);
    std::cout << format_real(step) << ',' << format_real(r) << "\n";
  }
  const Real ratio = residuals[0] / residuals[1];
  std::cout << "halving ratio " << format_real(ratio) << "\n";
  const bool ok = residuals[0] < 1e-3 && ratio > 3.0 && ratio < 5.0;
  std::cout << (ok ? "second-order convergence confirmed\n"
                   : "second-order convergence NOT confirmed\n");
  return ok ? kExitPass : kExitVerdict;
}

int cmd_morawetz(const std::string& config_path) {
  auto [scenario, solver, grid] = parse_config(config_path);
  if (scenario.horizons.empty() || scenario.radii.empty()) {
    throw ConfigError("morawetz: config must set scenario.horizons and "
                      "scenario.radii");
  }
  const DecayReport rep = run_scenario(scenario, solver, grid);
  if (!rep.valid_run) {
    std::cout << "run invalid: " << rep.verdict_note << "\n";
    return kExitError;
  }
  std::cout << "T,R,average,ratio\n";
  for (std::size_t i = 0; i < rep.morawetz_averages.size(); ++i) {
    const auto& s = rep.morawetz_averages[i];
    std::cout << format_real(s.T) << ',' << format_real(s.R) << ','
              << format_real(s.value) << ','
              << format_real(rep.fit ? rep.fit->ratios[i] : 0.0) << "\n";
  }
  if (!rep.fit) {
    std::cout << "too few (T, R) pairs for a fit\n";
    return kExitVerdict;
  }
  std::cout << "C " << format_real(rep.fit->C) << "\n"
            << "spread " << format_real(rep.fit->spread) << "\n"
            << "T-doubling change " << format_real(rep.fit->doubling_change)
            << "\n";
  return rep.fit->verified ? kExitPass : kExitVerdict;
}

int cmd_sweep(const std::vector<std::string>& configs,
              const std::string& out_dir) {
  struct Job {
    std::string config;
    std::future<SimulateOutcome> future;
  };
  std::vector<Job> jobs;
  for (const auto& path : configs) {
    const fs::path sub =
        fs::path(out_dir) / fs::path(path).stem();
    jobs.push_back({path, std::async(std::launch::async, run_simulate_job,
                                     path, sub)});
  }
  int exit = kExitPass;
  for (auto& job : jobs) {
    try {
      const SimulateOutcome out = job.future.get();
      const bool ok = out.report.valid_run && out.report.decay_verdict;
      std::cout << job.config << ": " << (ok ? "pass" : "fail") << "\n";
      if (!out.report.valid_run) {
        exit = kExitError;
      } else if (!ok && exit == kExitPass) {
        exit = kExitVerdict;
      }
    } catch (const Error& err) {
      std::cout << job.config << ": error: " << err.what() << "\n";
      exit = kExitError;
    }
  }
  return exit;
}

int cmd_inequalities(int samples, unsigned seed, Real L, int N, Real b,
                     Real mu, const std::string& family, Real m, Real n) {
  const GridSpec grid = make_grid(L, N);
  const PotentialSpec pot = make_potential(family, m, n, "bounded");
  bool ok = true;

  // Gagliardo-Nirenberg ratio: empirical sup, stability under refinement.
  Real sup_coarse = 0.0, sup_fine = 0.0;
  {
    FieldSuite suite(grid, seed);
    for (int i = 0; i < samples; ++i) {
      sup_coarse = std::max(sup_coarse, gn_ratio(suite.next(), b));
    }
    FieldSuite fine_suite(make_grid(L, 2 * N), seed);
    for (int i = 0; i < samples; ++i) {
      sup_fine = std::max(sup_fine, gn_ratio(fine_suite.next(), b));
    }
  }
  const Real gn_change = std::abs(sup_fine - sup_coarse) / sup_coarse;
  std::cout << "GN sup " << format_real(sup_coarse) << " (refined "
            << format_real(sup_fine) << ", change "
            << format_real(gn_change) << ")\n";
  ok = ok && std::isfinite(sup_coarse) && gn_change < 0.05;

  const CoercivityReport base =
      coercivity_sweep(FormKind::B, pot, 0.0, samples, seed, grid);
  std::cout << "B form: min ratio " << format_real(base.min_ratio) << ", "
            << base.failures.size() << " failures\n";
  ok = ok && base.failures.empty() && base.min_ratio > 0.0;

  const CoercivityReport with_potential =
      coercivity_sweep(FormKind::B_V, pot, mu, samples, seed, grid);
  std::cout << "B_V form: min ratio " << format_real(with_potential.min_ratio)
            << ", min J " << format_real(with_potential.min_J) << ", "
            << with_potential.failures.size() << " failures\n";
  ok = ok && with_potential.failures.empty() &&
       with_potential.min_ratio > 0.0 && with_potential.min_J >= -1e-10;

  std::cout << (ok ? "inequality suite pass\n" : "inequality suite fail\n");
  return ok ? kExitPass : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decay diagnostics for the 1D inhomogeneous NLS equation"};
  app.require_subcommand(1);

  std::string config_path, out_dir = "out";
  auto* simulate = app.add_subcommand("simulate", "run one scenario");
  simulate->add_option("--config", config_path, "JSON run configuration")
      ->required();
  simulate->add_option("--out", out_dir, "output directory");

  std::string potential = "yukawa", variant = "cutoff";
  Real pm = 0.5, pn = 1.0, eig_L = 400.0;
  int eig_N = 16384;
  std::vector<Real> mu_list;
  auto* eigen = app.add_subcommand(
      "eigen", "lowest eigenvalue of -d2/dx2 + mu V0 over a coupling sweep");
  eigen->add_option("--potential", potential, "yukawa | inverse_power");
  eigen->add_option("--m", pm, "inner decay exponent");
  eigen->add_option("--n", pn, "outer decay parameter");
  eigen->add_option("--variant", variant, "cutoff | bounded");
  eigen->add_option("--mu", mu_list, "coupling values");
  eigen->add_option("--L", eig_L, "half box length");
  eigen->add_option("--N", eig_N, "grid points (power of two)");

  std::string weight = "cutoff", mollify = "4h";
  Real vR = 10.0, vdt = 1e-3, vT = 2.0, vL = 40.0, vsigma = 1.0, vb = 0.5,
       vmu = 0.0, vvm = 0.5, vvn = 1.0;
  int vN = 4096;
  std::string v_family = "yukawa";
  auto* verify = app.add_subcommand(
      "verify-identity", "centered-difference check of the Virial identity");
  verify->add_option("--weight", weight, "cutoff | bounded");
  verify->add_option("--R", vR, "cutoff radius");
  verify->add_option("--mollify", mollify,
                     "smoothing length, absolute or a multiple like 4h");
  verify->add_option("--dt", vdt, "base time step (also run at dt/2)");
  verify->add_option("--T", vT, "horizon");
  verify->add_option("--L", vL, "half box length");
  verify->add_option("--N", vN, "grid points");
  verify->add_option("--sigma", vsigma, "nonlinearity exponent");
  verify->add_option("--b", vb, "inhomogeneity decay rate");
  verify->add_option("--mu", vmu, "potential coupling (0 disables V)");
  verify->add_option("--potential", v_family, "potential family when mu > 0");
  verify->add_option("--m", vvm, "potential inner exponent");
  verify->add_option("--n", vvn, "potential outer parameter");

  std::string mor_config;
  auto* morawetz = app.add_subcommand(
      "morawetz", "space-time averages over a (T, R) grid with a bound fit");
  morawetz->add_option("--config", mor_config, "JSON run configuration")
      ->required();

  std::vector<std::string> sweep_configs;
  std::string sweep_out = "out";
  auto* sweep = app.add_subcommand("sweep", "run many configs concurrently");
  sweep->add_option("configs", sweep_configs, "JSON run configurations")
      ->required();
  sweep->add_option("--out", sweep_out, "output directory root");

  int samples = 100;
  unsigned seed = FieldSuite::kFrozenSeed;
  Real iL = 40.0, ib = 0.5, imu = 0.01, im = 0.5, in_ = 1.0;
  int iN = 4096;
  std::string ipot = "yukawa";
  auto* inequalities = app.add_subcommand(
      "inequalities", "Gagliardo-Nirenberg and coercivity sample suites");
  inequalities->add_option("--samples", samples, "suite size");
  inequalities->add_option("--seed", seed, "suite seed");
  inequalities->add_option("--L", iL, "half box length");
  inequalities->add_option("--N", iN, "grid points");
  inequalities->add_option("--b", ib, "inhomogeneity decay rate");
  inequalities->add_option("--mu", imu, "potential coupling");
  inequalities->add_option("--potential", ipot, "potential family");
  inequalities->add_option("--m", im, "potential inner exponent");
  inequalities->add_option("--n", in_, "potential outer parameter");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) return cmd_simulate(config_path, out_dir);
    if (*eigen) return cmd_eigen(potential, pm, pn, variant, mu_list, eig_L,
                                 eig_N);
    if (*verify) {
      return cmd_verify_identity(weight, vR, mollify, vdt, vT, vL, vN, vsigma,
                                 vb, vmu, v_family, vvm, vvn);
    }
    if (*morawetz) return cmd_morawetz(mor_config);
    if (*sweep) return cmd_sweep(sweep_configs, sweep_out);
    if (*inequalities) {
      return cmd_inequalities(samples, seed, iL, iN, ib, imu, ipot, im, in_);
    }
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
