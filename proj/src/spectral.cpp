#include "inls/spectral.hpp"

#include <numbers>

#include <unsupported/Eigen/FFT>

namespace inls {

Array wavenumbers(const GridSpec& grid) {
  const int n = grid.point_count;
  const Real base = std::numbers::pi / grid.half_length;
  Array k(n);
  for (int idx = 0; idx < n; ++idx) {
    const int m = (idx < n / 2) ? idx : idx - n;
    k[idx] = base * m;
  }
  return k;
}

namespace {
Eigen::FFT<Real>& engine_instance() {
  static thread_local Eigen::FFT<Real> engine;
  return engine;
}
}  // namespace

CArray fft(const CArray& u) {
  Eigen::FFT<Real>& engine = engine_instance();
  Eigen::VectorXcd in = u.matrix();
  Eigen::VectorXcd out(in.size());
  engine.fwd(out, in);
  return out.array();
}

CArray ifft(const CArray& uhat) {
  Eigen::FFT<Real>& engine = engine_instance();
  Eigen::VectorXcd in = uhat.matrix();
  Eigen::VectorXcd out(in.size());
  engine.inv(out, in);
  return out.array();
}

CArray apply_multiplier(const CArray& u, const CArray& multiplier) {
  if (u.size() != multiplier.size()) {
    throw ShapeError("apply_multiplier: size mismatch");
  }
  return ifft(fft(u) * multiplier);
}

}  // namespace inls
