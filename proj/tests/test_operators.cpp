#include <doctest.h>

#include <cmath>
#include <numbers>

#include "inls/operators.hpp"
#include "inls/random_fields.hpp"
#include "inls/state.hpp"

using namespace inls;

namespace {

Array gaussian_well(const GridSpec& grid, Real sign) {
  Array v(grid.point_count);
  for (int j = 0; j < grid.point_count; ++j) {
    const Real x = grid.node(j);
    v[j] = sign * std::exp(-x * x);
  }
  return v;
}

}  // namespace

TEST_CASE("weak-coupling bound state of an attractive Gaussian well") {
  // The shallow-well asymptotic E0 = -(mu int|V0|/2)^2 sharpens as mu -> 0.
  const GridSpec grid = make_grid(400.0, 16384);
  const Array well = gaussian_well(grid, -1.0);
  Real previous_error = 1.0;
  for (Real mu : {0.04, 0.02, 0.01}) {
    const EigenReport rep = lowest_eigenvalue(well, mu, grid);
    CHECK(rep.negative_count == 1);
    CHECK(rep.ground_state_parity == Parity::even);
    const Real predicted =
        -std::pow(mu * std::sqrt(std::numbers::pi) / 2.0, 2.0);
    const Real error =
        std::abs(rep.lowest_eigenvalue - predicted) / std::abs(predicted);
    CHECK(error < 0.1);
    CHECK(error < previous_error + 1e-12);
    previous_error = error;
  }
}

TEST_CASE("repulsive wells bind nothing") {
  const GridSpec grid = make_grid(400.0, 16384);
  const EigenReport rep =
      lowest_eigenvalue(gaussian_well(grid, +1.0), 0.01, grid);
  CHECK(rep.negative_count == 0);
  CHECK(rep.lowest_eigenvalue == 0.0);
  CHECK(rep.ground_state_parity == Parity::indeterminate);
}

TEST_CASE("eigensolve input validation") {
  const GridSpec grid = make_grid(40.0, 256);
  const Array well = gaussian_well(grid, -1.0);
  CHECK_THROWS_AS(lowest_eigenvalue(well, 0.0, grid), ConfigError);
  CHECK_THROWS_AS(lowest_eigenvalue(Array::Zero(10), 0.1, grid), ShapeError);
  Array bad = well;
  bad[3] = std::nan("");
  CHECK_THROWS_AS(lowest_eigenvalue(bad, 0.1, grid), ConfigError);
}

TEST_CASE("negative count grows monotonically with the coupling") {
  const GridSpec grid = make_grid(100.0, 4096);
  const PotentialSpec pot{PotentialTag::inverse_power, 0.0, 3.0,
                          V0Variant::bounded};
  const std::vector<Real> mus = {0.01, 0.1, 1.0, 10.0};
  const auto reports = simon_klaus_check(pot, V0Variant::bounded, mus, grid);
  REQUIRE(reports.size() == 4);
  for (std::size_t i = 1; i < reports.size(); ++i) {
    CHECK(reports[i].negative_count >= reports[i - 1].negative_count);
  }
  CHECK(reports.front().negative_count >= 0);
  CHECK(reports.front().mu0_estimate == reports.back().mu0_estimate);
  CHECK(reports.front().mu0_estimate > 0.0);
  CHECK_THROWS_AS(simon_klaus_check(pot, V0Variant::bounded, {0.1, 0.05}, grid),
                  ConfigError);
}

TEST_CASE("two-grid extrapolation tightens the eigenvalue") {
  const GridSpec grid = make_grid(200.0, 4096);
  const EigenReport rep =
      lowest_eigenvalue(gaussian_well(grid, -1.0), 0.5, grid);
  REQUIRE(rep.negative_count >= 1);
  // fine-grid value lies between coarse and extrapolated
  const Real lo = std::min(rep.lowest_coarse, rep.lowest_eigenvalue);
  const Real hi = std::max(rep.lowest_coarse, rep.lowest_eigenvalue);
  CHECK(rep.lowest_fine >= lo - 1e-12);
  CHECK(rep.lowest_fine <= hi + 1e-12);
}

TEST_CASE("quadratic forms require real odd input") {
  const GridSpec grid = make_grid(40.0, 512);
  StateField even = make_state(grid, [](Real x) -> Complex {
    return std::exp(-x * x);
  });
  PotentialSpec none;
  CHECK_THROWS_AS(quadratic_form(even, FormKind::B, none, 0.0),
                  SymmetryPreconditionError);
  StateField complex_odd = make_state(grid, [](Real x) -> Complex {
    return Complex(0.0, x) * std::exp(-x * x);
  });
  CHECK_THROWS_AS(quadratic_form(complex_odd, FormKind::B, none, 0.0),
                  SymmetryPreconditionError);
  StateField odd = make_state(grid, [](Real x) -> Complex {
    return x * std::exp(-x * x);
  });
  CHECK_NOTHROW(quadratic_form(odd, FormKind::B, none, 0.0));
}

TEST_CASE("B splits into H plus J and B_V adds the potential kernel") {
  const GridSpec grid = make_grid(40.0, 1024);
  StateField odd = make_state(grid, [](Real x) -> Complex {
    return x * std::exp(-x * x / 4.0);
  });
  const PotentialSpec yuk{PotentialTag::yukawa, 0.5, 1.0, V0Variant::bounded};
  const Real B = quadratic_form(odd, FormKind::B, yuk, 0.0);
  CHECK(B == doctest::Approx(form_H(odd) + form_J(odd, yuk, 0.0))
                 .epsilon(1e-10));
  const Real mu = 0.3;
  const Real BV = quadratic_form(odd, FormKind::B_V, yuk, mu);
  CHECK(BV == doctest::Approx(form_H(odd) + form_J(odd, yuk, mu))
                  .epsilon(1e-9));
  CHECK(BV > B);  // x V' <= 0 for Yukawa, so the potential term adds
  CHECK(form_J(odd, yuk, mu) >= 0.0);
}

TEST_CASE("coercivity sweep over the frozen suite") {
  const GridSpec grid = make_grid(40.0, 1024);
  PotentialSpec none;
  const CoercivityReport rep = coercivity_sweep(
      FormKind::B, none, 0.0, 20, FieldSuite::kFrozenSeed, grid);
  CHECK(rep.sample_count == 20);
  CHECK_FALSE(rep.empty);
  CHECK(rep.failures.empty());
  CHECK(rep.min_ratio > 0.0);

  const PotentialSpec yuk{PotentialTag::yukawa, 0.5, 1.0, V0Variant::bounded};
  const CoercivityReport repv = coercivity_sweep(
      FormKind::B_V, yuk, 0.01, 20, FieldSuite::kFrozenSeed, grid);
  CHECK(repv.failures.empty());
  CHECK(repv.min_J >= -1e-10);

  const CoercivityReport empty =
      coercivity_sweep(FormKind::B, none, 0.0, 0, FieldSuite::kFrozenSeed,
                       grid);
  CHECK(empty.empty);
}

TEST_CASE("field suite is deterministic for a fixed seed") {
  const GridSpec grid = make_grid(40.0, 256);
  FieldSuite a(grid, FieldSuite::kFrozenSeed);
  FieldSuite b(grid, FieldSuite::kFrozenSeed);
  for (int i = 0; i < 3; ++i) {
    const StateField ua = a.next();
    const StateField ub = b.next();
    CHECK((ua.values - ub.values).abs().maxCoeff() == 0.0);
  }
  FieldSuite c(grid, FieldSuite::kFrozenSeed + 1);
  CHECK((a.next().values - c.next().values).abs().maxCoeff() > 0.0);
}
