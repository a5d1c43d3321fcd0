#pragma once

#include "inls/common.hpp"

namespace inls {

// Uniform staggered grid on the periodic box [-L, L). Nodes sit at
// x_j = -L + (j + 1/2) h with h = 2L/N, so x = 0 is never a node and the
// closest node to the origin is at distance h/2.
struct GridSpec {
  Real half_length = 0.0;  // L
  int point_count = 0;     // N, power of two
  bool staggered = true;

  Real h() const { return 2.0 * half_length / point_count; }

  Real node(int j) const {
    const Real offset = staggered ? 0.5 : 0.0;
    return -half_length + (j + offset) * h();
  }

  Array nodes() const;

  // Index of the node at -x_j (staggered grids only).
  int mirror_index(int j) const { return point_count - 1 - j; }
};

GridSpec make_grid(Real half_length, int point_count);

}  // namespace inls
