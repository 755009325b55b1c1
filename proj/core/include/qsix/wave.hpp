#pragma once

#include <complex>
#include <vector>

namespace qsix {

/// Tabulated amplitude and probability density on a grid, in position or
/// momentum space.  Position-space amplitudes are real (imag = 0).
struct WaveSample {
  std::vector<double> grid;
  std::vector<std::complex<double>> amplitude;
  std::vector<double> density;
};

} // namespace qsix
