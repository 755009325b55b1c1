#include "qsix/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qsix/errors.hpp"

namespace qsix::quadrature {

void legendre_rule(int order, std::vector<double>& nodes,
                   std::vector<double>& weights) {
  if (order < 1)
    throw std::invalid_argument("legendre_rule: order must be >= 1");
  nodes.assign(order, 0.0);
  weights.assign(order, 0.0);
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-angle initial guess, then Newton on the recurrence.
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < order; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = order * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15)
        break;
    }
    nodes[i] = -x;
    nodes[order - 1 - i] = x;
    weights[i] = weights[order - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  if (order % 2 == 1)
    nodes[order / 2] = 0.0; // exact center
}

double weight_moment(int q, double beta) {
  if (q < 0 || q % 2 != 0)
    throw std::invalid_argument(
        "weight_moment: q must be even and nonnegative (odd moments vanish "
        "by symmetry)");
  if (!(beta > 0.0))
    throw std::invalid_argument("weight_moment: beta must be > 0");
  const double a = (q + 1.0) / 4.0;
  return 0.5 * std::exp(std::lgamma(a) - a * std::log(2.0 * beta));
}

QuadratureRule build_rule(double half_width, int panels, int order) {
  if (!(half_width > 0.0))
    throw std::invalid_argument("build_rule: half_width must be > 0");
  if (panels < 1 || order < 1)
    throw std::invalid_argument("build_rule: panels and order must be >= 1");
  std::vector<double> xg, wg;
  legendre_rule(order, xg, wg);
  QuadratureRule rule;
  rule.half_width = half_width;
  rule.nodes.reserve(static_cast<std::size_t>(panels) * order);
  rule.weights.reserve(static_cast<std::size_t>(panels) * order);
  const double panel_width = 2.0 * half_width / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = -half_width + p * panel_width;
    const double mid = a + 0.5 * panel_width;
    for (int j = 0; j < order; ++j) {
      rule.nodes.push_back(mid + 0.5 * panel_width * xg[j]);
      rule.weights.push_back(0.5 * panel_width * wg[j]);
    }
  }
  return rule;
}

double choose_half_width(int degree, double tol) {
  if (!(tol > 0.0))
    throw std::invalid_argument("choose_half_width: unreachable tolerance");
  if (degree < 0)
    throw std::invalid_argument("choose_half_width: negative degree");
  const double ref =
      std::lgamma((degree + 1.0) / 4.0) - (degree + 1.0) / 4.0 * std::log(0.5);
  // Tail of x^degree e^{-x^4/2} beyond L is below ~L^{degree-3} e^{-L^4/2};
  // walk L up a quarter-step grid until the log-bound clears tol.
  for (double L = 3.0; L <= 64.0; L += 0.25) {
    const double log_tail =
        degree * std::log(L) - 0.5 * L * L * L * L + std::log(2.0);
    if (log_tail - ref < std::log(tol))
      return L;
  }
  throw NumericsError("choose_half_width: no admissible half-width found");
}

double choose_half_width(const std::function<double(double)>& density,
                         double tol) {
  if (!(tol > 0.0))
    throw std::invalid_argument("choose_half_width: unreachable tolerance");
  // Doubling loop: L accepted once the mass on [L, 2L] (plus mirror) is
  // below tol; superexponential decay makes the remainder negligible.
  std::vector<double> xg, wg;
  legendre_rule(32, xg, wg);
  double L = 2.0;
  for (int it = 0; it < 24; ++it) {
    const double mid = 1.5 * L, halfspan = 0.5 * L;
    double band = 0.0;
    for (std::size_t j = 0; j < xg.size(); ++j) {
      const double x = mid + halfspan * xg[j];
      band += halfspan * wg[j] * (density(x) + density(-x));
    }
    if (band < tol)
      return 2.0 * L;
    L *= 2.0;
  }
  throw NumericsError("choose_half_width: density tail does not clear the "
                      "tolerance within the search range");
}

QuadratureRule default_rule(int max_degree, double tol) {
  return build_rule(choose_half_width(max_degree, tol), 128, 16);
}

std::vector<double> uniform_grid(double half_width, double step) {
  if (!(half_width > 0.0) || !(step > 0.0))
    throw std::invalid_argument("uniform_grid: bad geometry");
  int half_count = static_cast<int>(std::ceil(half_width / step));
  std::vector<double> g;
  g.reserve(2 * half_count + 1);
  for (int i = -half_count; i <= half_count; ++i)
    g.push_back(i * step);
  return g;
}

double simpson(std::span<const double> y, double h) {
  if (y.size() < 3 || y.size() % 2 == 0)
    throw std::invalid_argument("simpson: need an odd number of samples");
  double s4 = 0.0, s2 = 0.0;
  for (std::size_t i = 1; i + 1 < y.size(); i += 2)
    s4 += y[i];
  for (std::size_t i = 2; i + 2 < y.size(); i += 2)
    s2 += y[i];
  return h / 3.0 * (y.front() + y.back() + 4.0 * s4 + 2.0 * s2);
}

std::vector<double> survival(std::span<const double> density, double h) {
  const std::size_t n = density.size();
  if (n < 5)
    throw std::invalid_argument("survival: too few samples");
  // Central-difference slopes, one-sided at the ends.
  std::vector<double> d(n);
  d[0] = (-3.0 * density[0] + 4.0 * density[1] - density[2]) / (2.0 * h);
  d[n - 1] =
      (3.0 * density[n - 1] - 4.0 * density[n - 2] + density[n - 3]) / (2.0 * h);
  for (std::size_t i = 1; i + 1 < n; ++i)
    d[i] = (density[i + 1] - density[i - 1]) / (2.0 * h);
  // Corrected trapezoid per interval, accumulated from the right.
  std::vector<double> s(n, 0.0);
  double acc = 0.0, comp = 0.0;
  for (std::size_t i = n - 1; i > 0; --i) {
    const double seg = 0.5 * h * (density[i - 1] + density[i]) -
                       h * h / 12.0 * (d[i] - d[i - 1]);
    const double y = seg - comp;
    const double t = acc + y;
    comp = (t - acc) - y;
    acc = t;
    s[i - 1] = acc;
  }
  return s;
}

} // namespace qsix::quadrature
