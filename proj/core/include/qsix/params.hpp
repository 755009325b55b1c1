#pragma once

#include <cmath>
#include <stdexcept>

namespace qsix {

/// Identifies one member of the sextic potential family together with the
/// numerical tolerances used by the solvers acting on it.  Atomic units
/// (hbar = m = 1) throughout.
struct ModelParams {
  /// Real coupling of the x^2 term.  Any finite value is accepted; the
  /// well-studied range is [-3/4, 6].
  double lambda = 0.0;
  /// Energy convergence tolerance for iterative facilities.
  double tol_energy = 1e-10;
  /// Tail-mass tolerance used when truncating the real line.
  double tol_quad = 1e-12;

  void validate() const {
    if (!std::isfinite(lambda))
      throw std::invalid_argument("ModelParams: lambda must be finite");
    if (!(tol_energy > 0.0))
      throw std::invalid_argument("ModelParams: tol_energy must be > 0");
    if (!(tol_quad > 0.0))
      throw std::invalid_argument("ModelParams: tol_quad must be > 0");
  }
};

} // namespace qsix
