#include "inls/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "inls/functionals.hpp"
#include "inls/random_fields.hpp"
#include "inls/spectral.hpp"

namespace inls {

namespace {

// Number of eigenvalues of the tridiagonal (diag d, offdiag e) strictly
// below lambda, by the Sturm / LDL^T sign-count recurrence.
int sturm_count(const Array& d, Real e, Real lambda) {
  int count = 0;
  Real q = 1.0;
  const Real e2 = e * e;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    q = d[i] - lambda - (i > 0 ? e2 / q : 0.0);
    if (q == 0.0) q = 1e-300;
    if (q < 0.0) ++count;
  }
  return count;
}

// Lowest eigenvalue below `upper` by bisection; requires count(upper) >= 1.
Real bisect_lowest(const Array& d, Real e, Real lower, Real upper) {
  Real lo = lower, hi = upper;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + std::abs(lo)); ++it) {
    const Real mid = 0.5 * (lo + hi);
    if (sturm_count(d, e, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Inverse iteration for the eigenvector of the shifted tridiagonal.
Array ground_vector(const Array& d, Real e, Real lambda) {
  const Eigen::Index n = d.size();
  const Real shift = lambda - 1e-10 * (1.0 + std::abs(lambda));
  Array v = Array::Constant(n, 1.0);
  for (Eigen::Index i = 0; i < n; ++i) v[i] += 1e-3 * std::sin(0.37 * i);
  for (int it = 0; it < 4; ++it) {
    // Thomas solve of (A - shift) w = v with pivot guards
    Array c(n), g(n);
    Real beta = d[0] - shift;
    if (std::abs(beta) < 1e-300) beta = 1e-300;
    c[0] = e / beta;
    g[0] = v[0] / beta;
    for (Eigen::Index i = 1; i < n; ++i) {
      beta = d[i] - shift - e * c[i - 1];
      if (std::abs(beta) < 1e-300) beta = 1e-300;
      c[i] = e / beta;
      g[i] = (v[i] - e * g[i - 1]) / beta;
    }
    v[n - 1] = g[n - 1];
    for (Eigen::Index i = n - 2; i >= 0; --i) v[i] = g[i] - c[i] * v[i + 1];
    const Real norm = std::sqrt(v.square().sum());
    if (!(norm > 0.0) || !v.isFinite().all()) {
      throw SolverError("inverse iteration failed for the ground state");
    }
    v /= norm;
  }
  return v;
}

Parity classify_parity(const Array& v) {
  const Eigen::Index n = v.size();
  Real dot = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) dot += v[i] * v[n - 1 - i];
  if (dot > 0.9) return Parity::even;
  if (dot < -0.9) return Parity::odd;
  return Parity::indeterminate;
}

struct GridSolve {
  Real lowest = 0.0;
  int negative_count = 0;
  Parity parity = Parity::indeterminate;
};

GridSolve solve_on_grid(const Array& V0, Real mu, const GridSpec& grid) {
  const Real h = grid.h();
  const Real e = -1.0 / (h * h);
  Array d = 2.0 / (h * h) + mu * V0;

  GridSolve out;
  out.negative_count = sturm_count(d, e, 0.0);
  if (out.negative_count > 0) {
    const Real lower = d.minCoeff() - 2.0 * std::abs(e);  // Gershgorin
    out.lowest = bisect_lowest(d, e, lower, 0.0);
    out.parity = classify_parity(ground_vector(d, e, out.lowest));
  }
  return out;
}

// Catmull-Rom interpolation of coarse staggered samples at arbitrary x.
Real interp_cubic(const Array& samples, const GridSpec& grid, Real x) {
  const Real h = grid.h();
  const Real pos = (x + grid.half_length) / h - 0.5;
  const int i1 = std::clamp(static_cast<int>(std::floor(pos)), 0,
                            grid.point_count - 1);
  const int i0 = std::max(i1 - 1, 0);
  const int i2 = std::min(i1 + 1, grid.point_count - 1);
  const int i3 = std::min(i1 + 2, grid.point_count - 1);
  const Real t = pos - i1;
  const Real p0 = samples[i0], p1 = samples[i1], p2 = samples[i2],
             p3 = samples[i3];
  return p1 + 0.5 * t * (p2 - p0 +
         t * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 +
         t * (3.0 * (p1 - p2) + p3 - p0)));
}

EigenReport assemble_report(const Array& V0_coarse, const Array& V0_fine,
                            Real mu, const GridSpec& coarse,
                            const GridSpec& fine) {
  const GridSolve a = solve_on_grid(V0_coarse, mu, coarse);
  const GridSolve b = solve_on_grid(V0_fine, mu, fine);

  EigenReport rep;
  rep.mu = mu;
  rep.negative_count = b.negative_count;
  rep.ground_state_parity = b.parity;
  rep.moment_integral = coarse.h() * V0_coarse.sum();
  if (a.negative_count > 0 && b.negative_count > 0) {
    rep.lowest_coarse = a.lowest;
    rep.lowest_fine = b.lowest;
    // three-point FD is O(h^2) consistent
    rep.lowest_eigenvalue = (4.0 * b.lowest - a.lowest) / 3.0;
  }
  rep.mu0_estimate = (rep.negative_count <= 1) ? mu : 0.0;
  return rep;
}

}  // namespace

EigenReport lowest_eigenvalue(const Array& V0_samples, Real mu,
                              const GridSpec& grid) {
  if (mu <= 0.0) throw ConfigError("lowest_eigenvalue: mu must be positive");
  if (V0_samples.size() != grid.point_count) {
    throw ShapeError("lowest_eigenvalue: sample count mismatch");
  }
  if (!V0_samples.isFinite().all()) {
    throw ConfigError("lowest_eigenvalue: non-finite potential samples");
  }
  const GridSpec fine{grid.half_length, 2 * grid.point_count, true};
  Array V0_fine(fine.point_count);
  for (int j = 0; j < fine.point_count; ++j) {
    V0_fine[j] = interp_cubic(V0_samples, grid, fine.node(j));
  }
  return assemble_report(V0_samples, V0_fine, mu, grid, fine);
}

std::vector<EigenReport> simon_klaus_check(const PotentialSpec& pot,
                                           V0Variant variant,
                                           const std::vector<Real>& mu_list,
                                           const GridSpec& grid) {
  for (std::size_t i = 0; i < mu_list.size(); ++i) {
    if (mu_list[i] <= 0.0) {
      throw ConfigError("simon_klaus_check: couplings must be positive");
    }
    if (i > 0 && mu_list[i] <= mu_list[i - 1]) {
      throw ConfigError("simon_klaus_check: couplings must increase");
    }
  }
  const GridSpec fine{grid.half_length, 2 * grid.point_count, true};
  const Array V0_coarse = sample_V0(pot, variant, grid.nodes());
  const Array V0_fine = sample_V0(pot, variant, fine.nodes());

  std::vector<EigenReport> reports;
  reports.reserve(mu_list.size());
  for (Real mu : mu_list) {
    reports.push_back(assemble_report(V0_coarse, V0_fine, mu, grid, fine));
  }
  // largest tested coupling still matching the small-coupling dichotomy
  Real mu0 = 0.0;
  for (const auto& rep : reports) {
    if (rep.negative_count <= 1) mu0 = std::max(mu0, rep.mu);
  }
  for (auto& rep : reports) rep.mu0_estimate = mu0;
  return reports;
}

namespace {

void require_real_odd(const StateField& w) {
  Real norm2 = 0.0, imag2 = 0.0;
  for (Eigen::Index j = 0; j < w.values.size(); ++j) {
    norm2 += std::norm(w.values[j]);
    imag2 += w.values[j].imag() * w.values[j].imag();
  }
  const Real norm = std::sqrt(w.grid.h() * norm2);
  if (std::sqrt(w.grid.h() * imag2) > 1e-12 * std::max(norm, 1e-300)) {
    throw SymmetryPreconditionError("quadratic form requires a real field");
  }
  if (even_part_norm(w) > 1e-10 * std::max(norm, 1e-300)) {
    throw SymmetryPreconditionError("quadratic form requires an odd field");
  }
}

Array real_part(const StateField& w) { return w.values.real(); }

Array weight_pow(const Array& x, Real p) {
  Array out(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    out[j] = std::pow(1.0 + std::abs(x[j]), p);
  }
  return out;
}

Array d_dx(const StateField& proto, const Array& samples) {
  StateField tmp = proto;
  tmp.values = samples.cast<Complex>();
  return spectral_derivative(tmp).values.real();
}

}  // namespace

Real form_H(const StateField& w) {
  require_real_odd(w);
  const Array x = w.grid.nodes();
  const Array f = real_part(w);
  const Array fx = d_dx(w, f);
  const Array rho = f * weight_pow(x, -1.0);
  const Array rho_x = d_dx(w, rho);
  const Real a = quadrature((weight_pow(x, -4.0) * f.square()).eval(), w.grid);
  const Real k = quadrature((weight_pow(x, -2.0) * fx.square()).eval(), w.grid);
  const Real r = quadrature(rho_x.square().eval(), w.grid);
  return -3.0 * a - r + 2.0 * k;
}

Real form_J(const StateField& w, const PotentialSpec& pot, Real mu) {
  require_real_odd(w);
  const Array x = w.grid.nodes();
  const Array rho = real_part(w) * weight_pow(x, -1.0);
  const Array rho_x = d_dx(w, rho);
  Real value = quadrature(rho_x.square().eval(), w.grid);
  if (mu != 0.0 && pot.tag != PotentialTag::zero) {
    const Array V0 = sample_V0(pot, V0Variant::bounded, x);
    value += mu * quadrature((V0 * rho.square()).eval(), w.grid);
  }
  return value;
}

Real quadratic_form(const StateField& w, FormKind form,
                    const PotentialSpec& pot, Real mu) {
  require_real_odd(w);
  const Array x = w.grid.nodes();
  const Array f = real_part(w);
  const Array fx = d_dx(w, f);
  const Real a = quadrature((weight_pow(x, -4.0) * f.square()).eval(), w.grid);
  const Real k = quadrature((weight_pow(x, -2.0) * fx.square()).eval(), w.grid);
  Real value = -3.0 * a + 2.0 * k;
  if (form == FormKind::B_V && mu != 0.0 && pot.tag != PotentialTag::zero) {
    Array kernel(x.size());
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      kernel[j] =
          x[j] * eval_V_prime(pot, x[j]) / (1.0 + std::abs(x[j]));
    }
    value -= mu * quadrature((kernel * f.square()).eval(), w.grid);
  }
  return value;
}

CoercivityReport coercivity_sweep(FormKind form, const PotentialSpec& pot,
                                  Real mu, int sample_count, unsigned seed,
                                  const GridSpec& grid) {
  CoercivityReport rep;
  rep.form = form;
  rep.sample_count = sample_count;
  if (sample_count < 1) {
    rep.empty = true;
    return rep;
  }
  FieldSuite suite(grid, seed);
  rep.min_ratio = std::numeric_limits<Real>::infinity();
  rep.min_J = std::numeric_limits<Real>::infinity();
  for (int i = 0; i < sample_count; ++i) {
    const StateField u = project_odd(suite.next());
    const Real denom = weighted_h1(u, alpha_weight());
    if (std::sqrt(denom) <= 1e-12) continue;

    StateField re = u, im = u;
    re.values = u.values.real().cast<Complex>();
    im.values = u.values.imag().cast<Complex>();
    const Real value =
        quadratic_form(re, form, pot, mu) + quadratic_form(im, form, pot, mu);
    const Real ratio = value / denom;
    if (ratio <= 0.0) rep.failures.push_back(i);
    rep.min_ratio = std::min(rep.min_ratio, ratio);
    if (form == FormKind::B_V) {
      rep.min_J = std::min({rep.min_J, form_J(re, pot, mu),
                            form_J(im, pot, mu)});
    }
  }
  return rep;
}

}  // namespace inls
