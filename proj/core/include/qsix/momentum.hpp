#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "qsix/quadrature.hpp"
#include "qsix/variational.hpp"
#include "qsix/wave.hpp"

namespace qsix {

enum class TransformMethod { Quadrature, Series };

/// Momentum-space wavefunction phi(p) = (2 pi)^{-1/2} integral psi(x)
/// exp(-i p x) dx on a grid.  Even source states give real phi, odd give
/// purely imaginary phi.
struct MomentumSample {
  std::vector<double> grid;
  std::vector<std::complex<double>> amplitude;
  std::vector<double> density;
  TransformMethod method = TransformMethod::Quadrature;
};

namespace momentum {

struct TransformOptions {
  double half_width = 0.0; ///< position-space truncation; <= 0 -> automatic
  int panels = 128;
  int order = 16;
  int min_nodes_per_period = 12; ///< oscillation guard
};

/// Fourier transform by position-space quadrature of the oscillatory
/// integral.  Refuses (NumericsError) when the rule has fewer than
/// min_nodes_per_period nodes per oscillation period at the largest |p|,
/// naming the panel count that would suffice.
MomentumSample transform_quadrature(const EigenState& state,
                                    std::span<const double> pgrid,
                                    const TransformOptions& options = {});

/// Same transform for an arbitrary real amplitude of known parity
/// (e.g. an exact-sector state).
MomentumSample transform_quadrature(const std::function<double(double)>& psi,
                                    Parity parity,
                                    std::span<const double> pgrid,
                                    const TransformOptions& options = {});

/// phi(p) as the entire-function Maclaurin series
///   (2 pi)^{-1/2} sum_k (-i p)^k / k! * integral x^{m+k} exp(-x^4/4) dx
/// over the basis expansion, with closed-form quartic moments and
/// compensated summation in extended precision.  Coefficients are the
/// state's basis coefficients scaled by its norm constant.  Throws
/// CancellationError when more than ~6 digits would be lost (sum of
/// magnitudes exceeding 1e6 times the result); callers fall back to
/// transform_quadrature.
std::complex<double> transform_series(Parity parity,
                                      std::span<const double> coefficients,
                                      double p);

/// Series transform of a whole state over a grid.
MomentumSample transform_series(const EigenState& state,
                                std::span<const double> pgrid);

/// Momentum-space truncation: doubles p_max until the empirical tail of
/// |phi|^2 falls below tol.
double momentum_half_width(const EigenState& state, double tol = 1e-12);

/// Uniform momentum grid (default spacing 0.01) out to the tail-controlled
/// p_max.
std::vector<double> default_momentum_grid(const EigenState& state,
                                          double tol = 1e-12,
                                          double spacing = 0.01);

/// Left/right-localized combinations (psi_plus -+ psi_minus)/sqrt(2) of a
/// consecutive opposite-parity pair, sampled on the grid.  First element
/// carries its mass on x < 0.  Throws std::invalid_argument on a parity
/// mismatch.
std::pair<WaveSample, WaveSample> localized_pair(
    const EigenState& state_plus, const EigenState& state_minus,
    std::span<const double> xgrid);

} // namespace momentum
} // namespace qsix
