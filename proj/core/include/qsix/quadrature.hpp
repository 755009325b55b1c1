#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qsix {

/// Composite Gauss-Legendre rule on a symmetric interval [-L, L].
/// Immutable after construction; weights are all positive and sum to 2L.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double half_width = 0.0;

  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0, c = 0.0; // Kahan
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double y = weights[i] * f(nodes[i]) - c;
      const double t = acc + y;
      c = (t - acc) - y;
      acc = t;
    }
    return acc;
  }
};

namespace quadrature {

/// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on the
/// recurrence.  order >= 1.
void legendre_rule(int order, std::vector<double>& nodes,
                   std::vector<double>& weights);

/// Closed form of the quartic-weight moment
///   integral x^q exp(-2 beta x^4) dx over the real line
/// = (2 beta)^{-(q+1)/4} Gamma((q+1)/4) / 2  for even q.
/// Odd q is rejected: the integral vanishes by symmetry and callers must
/// not rely on it.
double weight_moment(int q, double beta);

/// Composite Gauss-Legendre rule with `panels` panels of the given order
/// covering [-half_width, half_width].  Node set is symmetric.
QuadratureRule build_rule(double half_width, int panels, int order);

/// Smallest half-width L (on a 1/4 grid) such that the tail of
/// x^degree exp(-x^4/2) beyond [-L, L] is below tol relative to the full
/// moment.  Drives the position-space truncation.
double choose_half_width(int degree, double tol);

/// Empirical variant: doubles L until the density mass on [L, 2L] (plus
/// mirror) falls below tol.  Used for momentum-space truncation where only
/// samples of |phi|^2 are available.
double choose_half_width(const std::function<double(double)>& density,
                         double tol);

/// Default production rule: 128 panels x order 16 on the closed-form L for
/// the largest monomial degree used anywhere in the basis algebra.
QuadratureRule default_rule(int max_degree = 48, double tol = 1e-16);

// ---- uniform-grid machinery (entropies, divergences, survivals) ----

/// Uniform symmetric grid [-L, L] with an odd number of points.
std::vector<double> uniform_grid(double half_width, double step);

/// Composite Simpson on uniformly spaced samples (odd count).
double simpson(std::span<const double> y, double h);

/// Survival function S_i = integral from x_i to the right end of the
/// sampled density, by trapezoid with third-order end-slope correction
/// (O(h^4) on smooth data).  S decreases from ~1 to 0 left to right.
std::vector<double> survival(std::span<const double> density, double h);

} // namespace quadrature
} // namespace qsix
