#include "inls/functionals.hpp"

#include <algorithm>
#include <cmath>

#include "inls/spectral.hpp"

namespace inls {

Real quadrature(const Array& samples, const GridSpec& grid) {
  if (samples.size() != grid.point_count) {
    throw ShapeError("quadrature: sample count does not match the grid");
  }
  return grid.h() * samples.sum();
}

StateField spectral_derivative(const StateField& u) {
  const Array k = wavenumbers(u.grid);
  StateField out = u;
  out.values = apply_multiplier(u.values, k.cast<Complex>() * Complex(0.0, 1.0));
  return out;
}

Real mass(const StateField& u) {
  return u.grid.h() * u.values.abs2().sum();
}

namespace {

Array power_density(const StateField& u, Real sigma) {
  // |u|^{2 sigma + 2} with 0^{2 sigma} = 0
  Array out(u.values.size());
  for (Eigen::Index j = 0; j < u.values.size(); ++j) {
    const Real a = std::abs(u.values[j]);
    out[j] = abs_pow_2sigma(a, sigma) * a * a;
  }
  return out;
}

}  // namespace

EnergyBreakdown energy(const StateField& u, const ModelSpec& model) {
  EnergyBreakdown e;
  const StateField ux = spectral_derivative(u);
  e.kinetic = quadrature(ux.values.abs2(), u.grid);
  const Array x = u.grid.nodes();
  const Array dens = power_density(u, model.sigma);
  e.nonlinear =
      quadrature((sample_K(model, x) * dens).eval(), u.grid) /
      (model.sigma + 1.0);
  if (model.mu != 0.0) {
    e.potential = model.mu * quadrature(
        (sample_V(model.V_family, x) * u.values.abs2()).eval(), u.grid);
  }
  return e;
}

Real virial(const StateField& u, const WeightSpec& w) {
  if (w.kind != WeightKind::cutoff_R && w.kind != WeightKind::bounded) {
    throw ConfigError("virial: weight must be cutoff_R or bounded");
  }
  const StateField ux = spectral_derivative(u);
  const Array x = u.grid.nodes();
  Array integrand(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    integrand[j] =
        eval_phi(w, x[j], 0) * std::imag(u.values[j] * std::conj(ux.values[j]));
  }
  return quadrature(integrand, u.grid);
}

VirialTerms virial_rhs(const StateField& u, const ModelSpec& model,
                       const WeightSpec& w) {
  if (w.kind != WeightKind::cutoff_R && w.kind != WeightKind::bounded) {
    throw ConfigError("virial_rhs: weight must be cutoff_R or bounded");
  }
  const StateField ux = spectral_derivative(u);
  const Array x = u.grid.nodes();
  const Eigen::Index n = x.size();

  Array phi0(n), phi1(n), phi3(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    phi0[j] = eval_phi(w, x[j], 0);
    phi1[j] = eval_phi(w, x[j], 1);
    // For the bounded weight the x=0 singularity is off-grid (staggered).
    phi3[j] = eval_phi(w, x[j], 3);
  }

  const Array dens = power_density(u, model.sigma);
  const Array K = sample_K(model, x);
  const Array Kp = sample_K_prime(model, x);
  const Real c = 2.0 / (2.0 * model.sigma + 2.0);

  VirialTerms terms;
  terms.kinetic = 2.0 * quadrature((phi1 * ux.values.abs2()).eval(), u.grid);
  terms.phi3 = -0.5 * quadrature((phi3 * u.values.abs2()).eval(), u.grid);
  terms.K_phi_x = -(c - 1.0) * quadrature((phi1 * K * dens).eval(), u.grid);
  terms.K_prime = -c * quadrature((phi0 * Kp * dens).eval(), u.grid);
  if (model.mu != 0.0 && model.V_family.tag != PotentialTag::zero) {
    Array vprime(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      vprime[j] = eval_V_prime(model.V_family, x[j]);
    }
    terms.potential = -model.mu *
        quadrature((phi0 * vprime * u.values.abs2()).eval(), u.grid);
  }
  return terms;
}

Real weighted_h1(const StateField& u, const WeightSpec& alpha) {
  if (alpha.kind != WeightKind::alpha && alpha.kind != WeightKind::psi) {
    throw ConfigError("weighted_h1: weight must be alpha");
  }
  const StateField ux = spectral_derivative(u);
  const Array x = u.grid.nodes();
  Array w(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) w[j] = eval_phi(alpha, x[j], 0);
  return quadrature((w * (u.values.abs2() + ux.values.abs2())).eval(), u.grid);
}

std::pair<Real, Real> local_norms(const StateField& u, Real a, Real b) {
  if (a >= b) throw DegenerateInputError("local_norms: empty interval");
  Real sum = 0.0;
  Real sup = 0.0;
  int count = 0;
  for (int j = 0; j < u.grid.point_count; ++j) {
    const Real x = u.grid.node(j);
    if (x < a || x > b) continue;
    ++count;
    const Real a2 = std::norm(u.values[j]);
    sum += a2;
    sup = std::max(sup, std::sqrt(a2));
  }
  if (count == 0) {
    throw DegenerateInputError("local_norms: no grid nodes inside interval");
  }
  return {std::sqrt(u.grid.h() * sum), sup};
}

Real tail_mass(const StateField& u, Real fraction) {
  if (fraction <= 0.0 || fraction > 0.5) {
    throw ConfigError("tail_mass: fraction must lie in (0, 0.5]");
  }
  const Real cut = (1.0 - fraction) * u.grid.half_length;
  Real outer = 0.0, total = 0.0;
  for (int j = 0; j < u.grid.point_count; ++j) {
    const Real a2 = std::norm(u.values[j]);
    total += a2;
    if (std::abs(u.grid.node(j)) >= cut) outer += a2;
  }
  if (total == 0.0) return 0.0;
  return outer / total;
}

Real gn_ratio(const StateField& u, Real b) {
  if (b <= 0.0 || b >= 1.0) throw ConfigError("gn_ratio: b must lie in (0,1)");
  const Array x = u.grid.nodes();
  Array f(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const Real a = std::abs(u.values[j]);
    f[j] = std::pow(std::abs(x[j]), -b) *
           (a > 0.0 ? std::exp((6.0 - 2.0 * b) * std::log(a)) : 0.0);
  }
  const Real lhs = quadrature(f, u.grid);
  const StateField ux = spectral_derivative(u);
  const Real kin = quadrature(ux.values.abs2(), u.grid);
  const Real m = mass(u);
  if (kin == 0.0 || m == 0.0) {
    throw DegenerateInputError("gn_ratio: zero field");
  }
  return lhs / (kin * std::pow(m, (4.0 - 2.0 * b) / 2.0));
}

Real morawetz_integrand(const StateField& u, const ModelSpec& model,
                        MorawetzKernel kernel, Real R) {
  const Array x = u.grid.nodes();
  const Array dens = power_density(u, model.sigma);
  Array f = Array::Zero(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const Real ax = std::abs(x[j]);
    switch (kernel) {
      case MorawetzKernel::xKprime_over_1px:
        f[j] = std::abs(x[j] * eval_K_prime(model, x[j])) / (1.0 + ax);
        break;
      case MorawetzKernel::absx_minus_b:
        if (ax <= R) f[j] = std::pow(ax, -model.b);
        break;
      case MorawetzKernel::absx_decay:
        if (ax <= R) {
          f[j] = std::pow(ax, -model.b) * std::pow(1.0 + ax, -2.0 + model.b);
        }
        break;
      case MorawetzKernel::alpha4_absx:
        f[j] = std::pow(ax, -model.b) * std::pow(1.0 + ax, -4.0);
        break;
    }
  }
  return quadrature((f * dens).eval(), u.grid);
}

Real morawetz_average(const std::vector<std::pair<Real, Real>>& series,
                      Real T) {
  if (series.empty()) throw QueryError("morawetz_average: empty series");
  if (series.size() == 1) return series.front().second;
  if (series.back().first < T) {
    throw QueryError("morawetz_average: horizon exceeds the recorded series");
  }
  Real integral = 0.0;
  for (std::size_t i = 1; i < series.size(); ++i) {
    const auto& [t0, v0] = series[i - 1];
    const auto& [t1, v1] = series[i];
    if (t0 >= T) break;
    if (t1 <= T) {
      integral += 0.5 * (v0 + v1) * (t1 - t0);
    } else {
      // partial last panel, linear in t
      const Real f = (T - t0) / (t1 - t0);
      const Real vT = v0 + f * (v1 - v0);
      integral += 0.5 * (v0 + vT) * (T - t0);
      break;
    }
  }
  return integral / T;
}

DiagnosticsRecord diagnose(const StateField& u, const ModelSpec& model,
                           const DiagnosticsConfig& cfg) {
  DiagnosticsRecord rec;
  rec.t = u.t;
  rec.mass = mass(u);
  rec.energy = energy(u, model).total();
  if (cfg.weight) {
    rec.I = virial(u, *cfg.weight);
    const VirialTerms terms = virial_rhs(u, model, *cfg.weight);
    rec.rhs_kinetic = terms.kinetic;
    rec.rhs_phi3 = terms.phi3;
    rec.rhs_K1 = terms.K_phi_x;
    rec.rhs_K2 = terms.K_prime;
    rec.rhs_V = terms.potential;
    rec.rhs_sum = terms.sum();
  }
  rec.h1_alpha = weighted_h1(u, alpha_weight());
  std::tie(rec.l2_local, rec.linf_local) =
      local_norms(u, cfg.local_a, cfg.local_b);
  rec.tail_mass_fraction = tail_mass(u, cfg.tail_fraction);
  rec.even_norm = even_part_norm(u);
  rec.morawetz.reserve(cfg.morawetz.size());
  for (const auto& q : cfg.morawetz) {
    rec.morawetz.push_back(morawetz_integrand(u, model, q.kernel, q.R));
  }
  return rec;
}

}  // namespace inls
