#include "qsix/momentum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qsix/errors.hpp"
#include "qsix/quadrature.hpp"

namespace qsix::momentum {
namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr double kCancellationLimit = 1e6;

// integral x^q exp(-x^4/4) dx = 2^{(q-1)/2} Gamma((q+1)/4), even q.
long double quarter_moment(int q) {
  return std::exp(0.5L * (q - 1) * std::log(2.0L) +
                  lgammal((q + 1) / 4.0L));
}

double auto_half_width(int max_exponent, double tol) {
  // the amplitude weight exp(-x^4/4) decays half as fast in x^4 as the
  // density weight the analytic half-width rule is built for
  return std::pow(2.0, 0.25) *
         quadrature::choose_half_width(max_exponent + 4, tol);
}

MomentumSample transform_with_rule(const std::function<double(double)>& psi,
                                   std::span<const double> pgrid,
                                   const TransformOptions& options,
                                   double half_width) {
  const QuadratureRule rule =
      quadrature::build_rule(half_width, options.panels, options.order);

  double pmax = 0.0;
  for (double p : pgrid)
    pmax = std::max(pmax, std::abs(p));
  // oscillation guard: enough nodes per period 2 pi / p across [-L, L]
  const double periods = half_width * pmax / M_PI;
  const double per_period =
      periods > 0.0 ? static_cast<double>(rule.nodes.size()) / periods
                    : std::numeric_limits<double>::infinity();
  if (per_period < options.min_nodes_per_period) {
    const int need_panels = static_cast<int>(
        std::ceil(options.min_nodes_per_period * periods / options.order));
    throw NumericsError(
        "transform_quadrature: only " + std::to_string(per_period) +
        " nodes per oscillation at |p| = " + std::to_string(pmax) +
        "; rebuild with at least " + std::to_string(need_panels) + " panels");
  }

  std::vector<double> fx(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    fx[i] = rule.weights[i] * psi(rule.nodes[i]);

  MomentumSample out;
  out.method = TransformMethod::Quadrature;
  out.grid.assign(pgrid.begin(), pgrid.end());
  out.amplitude.resize(pgrid.size());
  out.density.resize(pgrid.size());
  const double pref = 1.0 / std::sqrt(kTwoPi);
  for (std::size_t ip = 0; ip < pgrid.size(); ++ip) {
    const double p = pgrid[ip];
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      re += fx[i] * std::cos(p * rule.nodes[i]);
      im -= fx[i] * std::sin(p * rule.nodes[i]);
    }
    const std::complex<double> a(pref * re, pref * im);
    out.amplitude[ip] = a;
    out.density[ip] = std::norm(a);
  }
  return out;
}

} // namespace

MomentumSample transform_quadrature(const EigenState& state,
                                    std::span<const double> pgrid,
                                    const TransformOptions& options) {
  double L = options.half_width;
  if (L <= 0.0) {
    const int max_m = state.parity == Parity::Even
                          ? 2 * (static_cast<int>(state.coefficients.size()) - 1)
                          : 2 * static_cast<int>(state.coefficients.size()) - 1;
    L = auto_half_width(max_m, 1e-16);
  }
  return transform_with_rule(
      [&](double x) { return variational::wavefunction_value(state, x); },
      pgrid, options, L);
}

MomentumSample transform_quadrature(const std::function<double(double)>& psi,
                                    Parity parity,
                                    std::span<const double> pgrid,
                                    const TransformOptions& options) {
  (void)parity;
  const double L = options.half_width > 0.0 ? options.half_width : 8.0;
  return transform_with_rule(psi, pgrid, options, L);
}

std::complex<double> transform_series(Parity parity,
                                      std::span<const double> coefficients,
                                      double p) {
  if (coefficients.empty())
    throw std::invalid_argument("transform_series: empty coefficient vector");
  const auto ms = variational::basis_exponents(
      parity, static_cast<int>(coefficients.size()) - 1);

  // sum over k of (-ip)^k/k! * sum_m c_m mu(m+k); only k with the parity of
  // m contributes.  Kahan-compensated in extended precision.
  const bool odd = parity == Parity::Odd;
  long double acc = 0.0L, comp = 0.0L, abs_sum = 0.0L, max_term = 0.0L;
  const long double pl = p;
  int k = odd ? 1 : 0;
  long double pk_over_kf = odd ? pl : 1.0L; // p^k / k!
  for (; k < 4000; k += 2) {
    long double inner = 0.0L;
    for (std::size_t i = 0; i < coefficients.size(); ++i)
      inner += static_cast<long double>(coefficients[i]) *
               quarter_moment(ms[i] + k);
    const long double sign = ((k / 2) % 2 == 0) ? 1.0L : -1.0L;
    const long double term = sign * pk_over_kf * inner;

    const long double y = term - comp;
    const long double t = acc + y;
    comp = (t - acc) - y;
    acc = t;

    abs_sum += std::abs(term);
    max_term = std::max(max_term, std::abs(term));
    if (k > 8 && std::abs(term) < 1e-20L * max_term)
      break;
    // advance p^k/k! by two orders
    pk_over_kf *= pl * pl / ((k + 1.0L) * (k + 2.0L));
    if (!std::isfinite(static_cast<double>(pk_over_kf)))
      throw CancellationError("transform_series: term overflow", 0.0);
  }

  const long double magnitude = std::abs(acc);
  if (magnitude > 0.0L && abs_sum / magnitude > kCancellationLimit)
    throw CancellationError(
        "transform_series: cancellation would lose more than 6 digits at p "
        "= " + std::to_string(p) + "; use transform_quadrature",
        static_cast<double>(abs_sum / magnitude));

  const double value = static_cast<double>(acc / std::sqrt((long double)kTwoPi));
  if (odd)
    return {0.0, -value}; // odd k of (-i)^k: leading -i
  return {value, 0.0};
}

MomentumSample transform_series(const EigenState& state,
                                std::span<const double> pgrid) {
  std::vector<double> scaled(state.coefficients.size());
  for (std::size_t i = 0; i < scaled.size(); ++i)
    scaled[i] = state.norm_constant * state.coefficients[i];
  MomentumSample out;
  out.method = TransformMethod::Series;
  out.grid.assign(pgrid.begin(), pgrid.end());
  out.amplitude.resize(pgrid.size());
  out.density.resize(pgrid.size());
  for (std::size_t i = 0; i < pgrid.size(); ++i) {
    out.amplitude[i] = transform_series(state.parity, scaled, pgrid[i]);
    out.density[i] = std::norm(out.amplitude[i]);
  }
  return out;
}

double momentum_half_width(const EigenState& state, double tol) {
  if (!(tol > 0.0))
    throw std::invalid_argument("momentum_half_width: unreachable tolerance");
  auto density = [&](double p) {
    const double ap = std::abs(p);
    TransformOptions opt;
    // densify the rule as the probe momentum grows
    opt.panels = std::max(128, static_cast<int>(std::ceil(ap * 8.0)));
    const double pg[1] = {p};
    const MomentumSample s = transform_quadrature(state, pg, opt);
    return s.density[0];
  };
  return quadrature::choose_half_width(density, tol);
}

std::vector<double> default_momentum_grid(const EigenState& state, double tol,
                                          double spacing) {
  const double pmax = momentum_half_width(state, tol);
  return quadrature::uniform_grid(pmax, spacing);
}

std::pair<WaveSample, WaveSample> localized_pair(
    const EigenState& state_plus, const EigenState& state_minus,
    std::span<const double> xgrid) {
  if (state_plus.parity != Parity::Even || state_minus.parity != Parity::Odd)
    throw std::invalid_argument(
        "localized_pair: need an (even, odd) consecutive pair");
  WaveSample left, right;
  left.grid.assign(xgrid.begin(), xgrid.end());
  right.grid = left.grid;
  left.amplitude.resize(xgrid.size());
  right.amplitude.resize(xgrid.size());
  left.density.resize(xgrid.size());
  right.density.resize(xgrid.size());
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < xgrid.size(); ++i) {
    const double plus = variational::wavefunction_value(state_plus, xgrid[i]);
    const double minus = variational::wavefunction_value(state_minus, xgrid[i]);
    // with both amplitudes positive as x -> 0+, the difference combination
    // carries its mass on the left
    const double l = inv_sqrt2 * (plus - minus);
    const double r = inv_sqrt2 * (plus + minus);
    left.amplitude[i] = l;
    left.density[i] = l * l;
    right.amplitude[i] = r;
    right.density[i] = r * r;
  }
  return {std::move(left), std::move(right)};
}

} // namespace qsix::momentum
