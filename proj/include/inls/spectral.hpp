#pragma once

#include "inls/common.hpp"
#include "inls/grid.hpp"

namespace inls {

// Wavenumbers k_m = pi m / L in FFT bin order, m in [-N/2, N/2).
Array wavenumbers(const GridSpec& grid);

CArray fft(const CArray& u);
CArray ifft(const CArray& uhat);

// Applies the Fourier multiplier g(k) bin-wise: u -> ifft(g .* fft(u)).
CArray apply_multiplier(const CArray& u, const CArray& multiplier);

}  // namespace inls
