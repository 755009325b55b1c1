#include "qsix/wkb.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qsix/errors.hpp"
#include "qsix/potential.hpp"
#include "qsix/quadrature.hpp"

namespace qsix::wkb {
namespace {

constexpr int kActionOrder = 160; // Gauss order for endpoint-mapped actions

struct GaussCache {
  std::vector<double> nodes, weights;
  GaussCache() { quadrature::legendre_rule(kActionOrder, nodes, weights); }
};
const GaussCache& gauss() {
  static const GaussCache c;
  return c;
}

// Positive roots t1 < t2 of t^3 - 4t = 2 eps (t = y^2), eps in (U_min, 0):
// trigonometric three-real-root form, then one Newton polish.
void cubic_turning(double eps, double& t1, double& t2) {
  const double p = -4.0, q = -2.0 * eps;
  const double m = 2.0 * std::sqrt(-p / 3.0);
  double arg = 3.0 * q / (p * m);
  arg = std::clamp(arg, -1.0, 1.0);
  const double theta = std::acos(arg) / 3.0;
  double roots[3];
  for (int k = 0; k < 3; ++k)
    roots[k] = m * std::cos(theta - 2.0 * M_PI * k / 3.0);
  std::sort(roots, roots + 3);
  // roots: negative, small positive, large positive
  t1 = roots[1];
  t2 = roots[2];
  for (double* t : {&t1, &t2}) {
    const double f = (*t) * (*t) * (*t) - 4.0 * (*t) - 2.0 * eps;
    const double df = 3.0 * (*t) * (*t) - 4.0;
    *t -= f / df;
  }
}

// integral sqrt(num(y)) dy over [a, b] where num vanishes linearly at both
// ends: map y = mid - half*cos(phi) so the square-root endpoint factors
// become smooth.
template <class F>
double endpoint_mapped_action(double a, double b, F&& num) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  const auto& g = gauss();
  double acc = 0.0;
  for (int i = 0; i < kActionOrder; ++i) {
    const double phi = 0.5 * M_PI * (g.nodes[i] + 1.0);
    const double w = 0.5 * M_PI * g.weights[i];
    const double y = mid - half * std::cos(phi);
    const double f = num(y);
    const double denom = (y - a) * (b - y);
    const double smooth = denom > 0.0 ? std::max(f / denom, 0.0) : 0.0;
    // sqrt((y-a)(b-y)) = half sin(phi) and dy = half sin(phi) dphi
    const double jac = half * std::sin(phi);
    acc += w * std::sqrt(smooth) * jac * jac;
  }
  return acc;
}

// Right-well action integral sqrt(2 eps - 2 U(y)) dy for the leading-order
// rescaled potential.
double well_action_leading(double eps) {
  double t1, t2;
  cubic_turning(eps, t1, t2);
  const double y1 = std::sqrt(t1), y2 = std::sqrt(t2);
  return endpoint_mapped_action(y1, y2, [&](double y) {
    return 2.0 * eps - (std::pow(y, 6) - 4.0 * y * y);
  });
}

struct FullWell {
  double lambda_quarter; // lambda^{1/4}
  double lambda_32;      // lambda^{3/2}
  ModelParams params;

  double U(double y) const {
    return potential::evaluate(params, lambda_quarter * y) / lambda_32;
  }
};

// Turning points of the full rescaled potential around its right minimum.
void full_turning(const FullWell& w, double eps, double y_min, double& y1,
                  double& y2) {
  auto above = [&](double y) { return w.U(y) - eps; };
  // inner: bisect between 0 (barrier top, U=0 > eps) and y_min
  double lo = 0.0, hi = y_min;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (above(mid) > 0.0 ? lo : hi) = mid;
  }
  y1 = 0.5 * (lo + hi);
  // outer: march right until U > eps, then bisect
  double step = std::max(y_min, 0.5);
  lo = y_min;
  hi = y_min + step;
  while (above(hi) <= 0.0) {
    lo = hi;
    hi += step;
    step *= 1.5;
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (above(mid) <= 0.0 ? lo : hi) = mid;
  }
  y2 = 0.5 * (lo + hi);
}

double well_action_full(const FullWell& w, double eps, double y_min) {
  double y1, y2;
  full_turning(w, eps, y_min, y1, y2);
  return endpoint_mapped_action(
      y1, y2, [&](double y) { return 2.0 * (eps - w.U(y)); });
}

} // namespace

double rescaled_potential(double y) {
  const double y2 = y * y;
  return 0.5 * (y2 * y2 * y2 - 4.0 * y2);
}

WkbResult quantize(int n, double lambda, ActionOrder order) {
  if (n < 0)
    throw std::invalid_argument("wkb::quantize: n must be >= 0");
  if (order == ActionOrder::LeadingOrder && lambda < 10.0)
    throw std::invalid_argument(
        "wkb::quantize: leading-order form needs lambda >= 10");
  if (!(lambda > 0.0))
    throw std::invalid_argument("wkb::quantize: lambda must be positive");

  WkbResult res;
  res.n = n;
  res.lambda = lambda;

  double rhs, band_lo;
  FullWell well{std::pow(lambda, 0.25), std::pow(lambda, 1.5),
                ModelParams{lambda}};
  double y_min = 0.0;
  std::function<double(double)> action;
  if (order == ActionOrder::LeadingOrder) {
    // x = lambda^{1/4} y, E = lambda^{3/2} eps turn
    //   integral sqrt(2(E - V)) dx = (n + 1/2) pi
    // into integral sqrt(2 eps - (y^6 - 4 y^2)) dy = (n + 1/2) pi / lambda;
    // a well holds the level iff n + 1/2 <= lambda/2.
    rhs = (n + 0.5) * M_PI / lambda;
    band_lo = rescaled_minimum;
    action = [](double eps) { return well_action_leading(eps); };
  } else {
    // exact x-space quantization transported to rescaled coordinates
    rhs = (n + 0.5) * M_PI / lambda;
    const WellGeometry g = potential::geometry(well.params);
    if (!g.is_double_well)
      throw NumericsError("wkb::quantize: no double well at this lambda");
    band_lo = g.minima_value / well.lambda_32;
    y_min = g.x_plus / well.lambda_quarter;
    action = [&, y_min](double eps) {
      return well_action_full(well, eps, y_min);
    };
  }

  // action is increasing in eps on (band_lo, 0); bisect
  double lo = band_lo * (1.0 - 1e-13), hi = -1e-15;
  const double f_hi = action(hi) - rhs;
  if (f_hi < 0.0)
    throw NumericsError("wkb::quantize: state n = " + std::to_string(n) +
                        " is not trapped below the barrier at lambda = " +
                        std::to_string(lambda));
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    ((action(mid) - rhs) < 0.0 ? lo : hi) = mid;
  }
  res.epsilon = 0.5 * (lo + hi);
  res.energy = well.lambda_32 * res.epsilon;

  if (order == ActionOrder::LeadingOrder) {
    double t1, t2;
    cubic_turning(res.epsilon, t1, t2);
    res.y1 = std::sqrt(t1);
    res.y2 = std::sqrt(t2);
  } else {
    full_turning(well, res.epsilon, y_min, res.y1, res.y2);
  }

  if (res.epsilon > rescaled_minimum && res.epsilon < 0.0) {
    const auto [act, split] = splitting(res.epsilon);
    res.action = act;
    res.splitting_estimate = split;
  } else {
    // below the leading-order band; the barrier-action object is undefined
    res.action = std::numeric_limits<double>::quiet_NaN();
    res.splitting_estimate = std::numeric_limits<double>::quiet_NaN();
  }
  return res;
}

std::pair<double, double> splitting(double epsilon) {
  if (!(epsilon > rescaled_minimum) || !(epsilon < 0.0))
    throw std::invalid_argument(
        "wkb::splitting: epsilon must lie in (U_min, 0)");
  double t1, t2;
  cubic_turning(epsilon, t1, t2);
  const double y1 = std::sqrt(t1);
  // barrier integrand sqrt(y^6 - 4 y^2 - 2 eps) over (-y1, y1), even in y;
  // single square-root endpoint at y1 handled by y = y1 sin(phi)
  const auto& g = gauss();
  double acc = 0.0;
  for (int i = 0; i < kActionOrder; ++i) {
    const double phi = 0.5 * M_PI * (g.nodes[i] + 1.0) * 0.5; // [0, pi/2]
    const double w = 0.25 * M_PI * g.weights[i];
    const double y = y1 * std::sin(phi);
    const double f = std::pow(y, 6) - 4.0 * y * y - 2.0 * epsilon;
    acc += w * std::sqrt(std::max(f, 0.0)) * y1 * std::cos(phi);
  }
  const double action = 2.0 * acc;
  return {action, std::exp(-action)};
}

double harmonic_limit(int n, double lambda) {
  if (!(lambda < 0.0))
    throw std::invalid_argument("wkb::harmonic_limit: lambda must be negative");
  if (n < 0)
    throw std::invalid_argument("wkb::harmonic_limit: n must be >= 0");
  return std::sqrt(-lambda) * (1.0 + 2.0 * n);
}

} // namespace qsix::wkb
