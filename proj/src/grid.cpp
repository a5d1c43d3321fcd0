#include "inls/grid.hpp"

namespace inls {

Array GridSpec::nodes() const {
  Array x(point_count);
  for (int j = 0; j < point_count; ++j) x[j] = node(j);
  return x;
}

GridSpec make_grid(Real half_length, int point_count) {
  if (half_length <= 0.0) {
    throw ConfigError("make_grid: half length L must be positive");
  }
  if (point_count < 16 || (point_count & (point_count - 1)) != 0) {
    throw ConfigError("make_grid: point count N must be a power of two >= 16");
  }
  return GridSpec{half_length, point_count, /*staggered=*/true};
}

}  // namespace inls
