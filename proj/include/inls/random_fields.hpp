#pragma once

#include <cstdint>
#include <vector>

#include "inls/common.hpp"
#include "inls/state.hpp"

namespace inls {

// Fixed-seed random test-function suite: sums of 5 Gaussians with centers in
// [-L/4, L/4], widths in [0.5, 2], complex amplitudes in the unit square.
// Uniform doubles come straight from a splitmix64 stream, so the suite is
// byte-reproducible across standard libraries.
class FieldSuite {
 public:
  static constexpr unsigned kFrozenSeed = 20240811;

  FieldSuite(const GridSpec& grid, unsigned seed);

  StateField next();
  std::vector<StateField> take(int count);

 private:
  std::uint64_t next_word();
  Real uniform(Real lo, Real hi);

  GridSpec grid_;
  std::uint64_t state_;
};

}  // namespace inls
