#pragma once

#include <functional>

#include "inls/common.hpp"
#include "inls/grid.hpp"

namespace inls {

// Complex wavefunction samples u(t, x_j) on a staggered grid.
struct StateField {
  GridSpec grid;
  CArray values;
  Real t = 0.0;

  bool all_finite() const { return values.isFinite().all(); }
};

StateField make_state(const GridSpec& grid,
                      const std::function<Complex(Real)>& f, Real t = 0.0);

// Odd part (u(x) - u(-x)) / 2 at every node; idempotent.
StateField project_odd(const StateField& u);

// L2 norm of the even part, drift monitor for odd runs.
Real even_part_norm(const StateField& u);

// Rescales u so that its discrete H^1 norm sqrt(||u||^2 + ||u_x||^2)
// equals epsilon (closed form, homogeneity of the norm).
StateField scale_to_h1(const StateField& u, Real epsilon);

Real h1_norm(const StateField& u);

}  // namespace inls
