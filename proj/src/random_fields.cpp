#include "inls/random_fields.hpp"

#include <cmath>

namespace inls {

FieldSuite::FieldSuite(const GridSpec& grid, unsigned seed)
    : grid_(grid), state_(seed) {}

std::uint64_t FieldSuite::next_word() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Real FieldSuite::uniform(Real lo, Real hi) {
  const Real u01 = static_cast<Real>(next_word() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u01;
}

StateField FieldSuite::next() {
  constexpr int kGaussians = 5;
  StateField u{grid_, CArray::Zero(grid_.point_count), 0.0};
  const Real quarter = grid_.half_length / 4.0;
  for (int g = 0; g < kGaussians; ++g) {
    const Real center = uniform(-quarter, quarter);
    const Real width = uniform(0.5, 2.0);
    const Complex amp(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
    for (int j = 0; j < grid_.point_count; ++j) {
      const Real z = (grid_.node(j) - center) / width;
      u.values[j] += amp * std::exp(-z * z);
    }
  }
  return u;
}

std::vector<StateField> FieldSuite::take(int count) {
  std::vector<StateField> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(next());
  return out;
}

}  // namespace inls
