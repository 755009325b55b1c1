#pragma once

#include "qsix/params.hpp"

namespace qsix {

/// Geometry of one family member: well minima and central barrier.
struct WellGeometry {
  double x_minus = 0.0;       ///< left minimum (= -x_plus)
  double x_plus = 0.0;        ///< right minimum; 0 for a single well
  double minima_value = 0.0;  ///< V(x_plus)
  double barrier_value = 0.0; ///< V(0), zero by construction
  bool is_double_well = false;
};

namespace potential {

/// V(x) = (x^6 + 2 x^4 - 2 (2 lambda + 1) x^2) / 2.  Even in x; total.
double evaluate(const ModelParams& params, double x);

/// dV/dx, used by turning-point refinement and tests.
double derivative(const ModelParams& params, double x);

/// Exact minima from the quadratic-in-x^2 root of dV/dx = 0.  Double-well
/// iff lambda > -1/2; the lambda = -1/2 boundary (merged minima) reports a
/// single well at x = 0.
WellGeometry geometry(const ModelParams& params);

/// Large-lambda estimate of the minima positions, sqrt(2) (lambda/3)^{1/4}.
double asymptotic_minimum(double lambda);

/// Large-lambda estimate of the well depth, (4/9) lambda (3 - 2 sqrt(3 lambda)).
double asymptotic_minimum_value(double lambda);

} // namespace potential
} // namespace qsix
