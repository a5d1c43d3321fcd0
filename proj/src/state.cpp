#include "inls/state.hpp"

#include <cmath>

#include "inls/spectral.hpp"

namespace inls {

StateField make_state(const GridSpec& grid,
                      const std::function<Complex(Real)>& f, Real t) {
  StateField u{grid, CArray(grid.point_count), t};
  for (int j = 0; j < grid.point_count; ++j) u.values[j] = f(grid.node(j));
  return u;
}

StateField project_odd(const StateField& u) {
  StateField out = u;
  const int n = u.grid.point_count;
  for (int j = 0; j < n; ++j) {
    out.values[j] = 0.5 * (u.values[j] - u.values[u.grid.mirror_index(j)]);
  }
  return out;
}

Real even_part_norm(const StateField& u) {
  const int n = u.grid.point_count;
  Real sum = 0.0;
  for (int j = 0; j < n; ++j) {
    sum += std::norm(0.5 * (u.values[j] + u.values[u.grid.mirror_index(j)]));
  }
  return std::sqrt(u.grid.h() * sum);
}

Real h1_norm(const StateField& u) {
  const Array k = wavenumbers(u.grid);
  const CArray ux =
      apply_multiplier(u.values, k.cast<Complex>() * Complex(0.0, 1.0));
  const Real h = u.grid.h();
  const Real l2sq = h * u.values.abs2().sum();
  const Real dxsq = h * ux.abs2().sum();
  return std::sqrt(l2sq + dxsq);
}

StateField scale_to_h1(const StateField& u, Real epsilon) {
  if (epsilon <= 0.0) throw ConfigError("scale_to_h1: epsilon must be > 0");
  const Real norm = h1_norm(u);
  if (norm <= 0.0) {
    throw DegenerateInputError("scale_to_h1: zero field cannot be rescaled");
  }
  StateField out = u;
  out.values *= epsilon / norm;
  return out;
}

}  // namespace inls
