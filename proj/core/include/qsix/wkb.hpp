#pragma once

#include <utility>

namespace qsix {

/// Which potential enters the semiclassical action.
enum class ActionOrder {
  /// Rescaled leading-order U(y) = (y^6 - 4 y^2)/2 with quantization
  /// rhs (n + 1/2) pi lambda^{-3/4}; the large-lambda asymptotic form.
  LeadingOrder,
  /// Exact potential in rescaled coordinates; equivalent to quantizing
  /// integral sqrt(2(E - V(x))) dx = (n + 1/2) pi over the right well.
  FullPotential,
};

/// One semiclassically quantized level.
struct WkbResult {
  int n = 0;
  double lambda = 0.0;
  double epsilon = 0.0; ///< rescaled energy E / lambda^{3/2}, negative
  double energy = 0.0;  ///< physical energy
  double y1 = 0.0;      ///< inner turning point of the right well
  double y2 = 0.0;      ///< outer turning point
  double action = 0.0;  ///< barrier action between the inner turning points
  double splitting_estimate = 0.0; ///< exp(-action), no prefactor
};

namespace wkb {

/// Minimum of the rescaled potential, -8/(3 sqrt(3)).
inline constexpr double rescaled_minimum = -1.5396007178390020;

/// U(y) = (y^6 - 4 y^2)/2.
double rescaled_potential(double y);

/// Solves the single-well quantization condition for epsilon_n by
/// bisection on the action integral (square-root endpoint singularities
/// removed by a trigonometric mapping).  Requires lambda >= 10 in
/// LeadingOrder; throws NumericsError when no trapped level exists in
/// (U_min, 0).
WkbResult quantize(int n, double lambda,
                   ActionOrder order = ActionOrder::FullPotential);

/// Barrier action integral sqrt(y^6 - 4 y^2 - 2 eps) dy between the inner
/// turning points, and the splitting estimate exp(-action).  eps must lie
/// in (U_min, 0).
std::pair<double, double> splitting(double epsilon);

/// Harmonic large-negative-lambda limit sqrt(|lambda|) (1 + 2n); lambda
/// must be negative.
double harmonic_limit(int n, double lambda);

} // namespace wkb
} // namespace qsix
