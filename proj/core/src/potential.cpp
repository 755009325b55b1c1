#include "qsix/potential.hpp"

#include <cmath>

namespace qsix::potential {

double evaluate(const ModelParams& params, double x) {
  const double x2 = x * x;
  return 0.5 * x2 * (x2 * x2 + 2.0 * x2 - 2.0 * (2.0 * params.lambda + 1.0));
}

double derivative(const ModelParams& params, double x) {
  const double x2 = x * x;
  return x * (3.0 * x2 * x2 + 4.0 * x2 - 2.0 * (2.0 * params.lambda + 1.0));
}

WellGeometry geometry(const ModelParams& params) {
  params.validate();
  WellGeometry g;
  g.barrier_value = 0.0;
  // dV/dx = x (3 x^4 + 4 x^2 - 2(2 lambda + 1)); the quadratic in x^2 has a
  // positive root iff lambda > -1/2.
  const double c = 2.0 * (2.0 * params.lambda + 1.0);
  const double t = (-2.0 + std::sqrt(4.0 + 3.0 * c)) / 3.0;
  if (t > 0.0) {
    g.is_double_well = true;
    g.x_plus = std::sqrt(t);
    g.x_minus = -g.x_plus;
    g.minima_value = evaluate(params, g.x_plus);
  } else {
    g.is_double_well = false;
    g.x_plus = g.x_minus = 0.0;
    g.minima_value = 0.0;
  }
  return g;
}

double asymptotic_minimum(double lambda) {
  return std::sqrt(2.0) * std::pow(lambda / 3.0, 0.25);
}

double asymptotic_minimum_value(double lambda) {
  return (4.0 / 9.0) * lambda * (3.0 - 2.0 * std::sqrt(3.0 * lambda));
}

} // namespace qsix::potential
