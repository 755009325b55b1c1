#pragma once

#include <span>
#include <vector>

#include "qsix/wave.hpp"

namespace qsix {

/// Variance- and entropy-based uncertainty summary of one state.
/// Entropies are in nats.
struct MeasureReport {
  double delta_x = 0.0;
  double delta_p = 0.0;
  double s_x = 0.0;
  double s_p = 0.0;
  double s_t = 0.0; ///< s_x + s_p
  double heisenberg = 0.0;
  double mean_x = 0.0;
  double mean_p = 0.0;
};

/// Divergences between two densities.  kl uses the fixed convention
/// D(a||b) = integral a ln(a/b); crj is symmetric.
struct DivergenceReport {
  double kl = 0.0;
  double crj = 0.0;
  bool kl_near_singular = false; ///< b underflowed where a did not
  /// direction note: the first argument is the averaging density
  const char* kl_direction = "D(first||second)";
};

namespace infotheory {

/// Shannon entropy -integral rho ln rho of a sampled density on a uniform
/// grid; integrand taken as 0 where rho underflows.
double shannon_entropy(std::span<const double> density, double step);

/// Moments and entropies of a position/momentum density pair.  Both
/// densities must be normalized; drift beyond 1e-6 is an error.
MeasureReport measure(const WaveSample& position_density,
                      const WaveSample& momentum_density);

/// Kullback-Leibler divergence integral a ln(a/b) on a common grid.
/// Contributions with a < 1e-300 are 0; where b underflows but a does not,
/// b is floored at 1e-300 and the near-singularity is flagged.
DivergenceReport kl_divergence(const WaveSample& a, const WaveSample& b);

/// Cumulative-residual Jeffreys divergence
///   integral (S_a - S_b) ln(S_a/S_b)
/// of the survival functions, computed by reverse cumulative quadrature on
/// the common grid; integrand set to 0 where both survivals are below
/// 1e-15.  Symmetric and nonnegative.
double crj_divergence(const WaveSample& a, const WaveSample& b);

/// Exact harmonic-oscillator density |psi_n|^2 with frequency omega on the
/// grid, n in 0..2, normalized.
WaveSample ho_reference_density(int n, double omega,
                                std::span<const double> grid);

/// Comparison frequency for the ho reference when none is given:
/// 2 sqrt(|lambda|) for lambda < 0 (deep single-well limit), sqrt(2)
/// otherwise.
double default_ho_omega(double lambda);

} // namespace infotheory
} // namespace qsix
