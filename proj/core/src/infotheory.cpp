#include "qsix/infotheory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qsix/errors.hpp"
#include "qsix/quadrature.hpp"

namespace qsix::infotheory {
namespace {

constexpr double kUnderflowFloor = 1e-300;
constexpr double kSurvivalCut = 1e-15;

double grid_step(const WaveSample& w) {
  if (w.grid.size() < 5)
    throw std::invalid_argument("infotheory: grid too small");
  const double h = w.grid[1] - w.grid[0];
  for (std::size_t i = 1; i + 1 < w.grid.size(); ++i)
    if (std::abs((w.grid[i + 1] - w.grid[i]) - h) > 1e-9 * std::abs(h))
      throw std::invalid_argument("infotheory: grid must be uniform");
  return h;
}

void require_common_grid(const WaveSample& a, const WaveSample& b) {
  if (a.grid.size() != b.grid.size())
    throw std::invalid_argument("infotheory: grid mismatch (size)");
  for (std::size_t i = 0; i < a.grid.size(); ++i)
    if (std::abs(a.grid[i] - b.grid[i]) > 1e-12)
      throw std::invalid_argument("infotheory: grid mismatch (points)");
}

double moment_of(const WaveSample& w, int power, double h) {
  std::vector<double> f(w.density.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    f[i] = w.density[i] * std::pow(w.grid[i], power);
  return quadrature::simpson(f, h);
}

} // namespace

double shannon_entropy(std::span<const double> density, double step) {
  std::vector<double> f(density.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double rho = density[i];
    f[i] = rho > kUnderflowFloor ? -rho * std::log(rho) : 0.0;
  }
  return quadrature::simpson(f, step);
}

MeasureReport measure(const WaveSample& position_density,
                      const WaveSample& momentum_density) {
  const double hx = grid_step(position_density);
  const double hp = grid_step(momentum_density);

  const double norm_x = quadrature::simpson(position_density.density, hx);
  const double norm_p = quadrature::simpson(momentum_density.density, hp);
  if (std::abs(norm_x - 1.0) > 1e-6 || std::abs(norm_p - 1.0) > 1e-6)
    throw NumericsError("measure: density normalization drift beyond 1e-6 "
                        "(x: " + std::to_string(norm_x) +
                        ", p: " + std::to_string(norm_p) + ")");

  MeasureReport r;
  r.mean_x = moment_of(position_density, 1, hx);
  r.mean_p = moment_of(momentum_density, 1, hp);
  r.delta_x = std::sqrt(moment_of(position_density, 2, hx) - r.mean_x * r.mean_x);
  r.delta_p = std::sqrt(moment_of(momentum_density, 2, hp) - r.mean_p * r.mean_p);
  r.s_x = shannon_entropy(position_density.density, hx);
  r.s_p = shannon_entropy(momentum_density.density, hp);
  r.s_t = r.s_x + r.s_p;
  r.heisenberg = r.delta_x * r.delta_p;
  return r;
}

DivergenceReport kl_divergence(const WaveSample& a, const WaveSample& b) {
  require_common_grid(a, b);
  const double h = grid_step(a);
  DivergenceReport rep;
  std::vector<double> f(a.density.size(), 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double pa = a.density[i];
    if (pa < kUnderflowFloor)
      continue; // lim rho->0 of rho ln rho = 0
    double pb = b.density[i];
    if (pb < kUnderflowFloor) {
      pb = kUnderflowFloor;
      rep.kl_near_singular = true;
    }
    f[i] = pa * std::log(pa / pb);
  }
  rep.kl = quadrature::simpson(f, h);
  return rep;
}

double crj_divergence(const WaveSample& a, const WaveSample& b) {
  require_common_grid(a, b);
  const double h = grid_step(a);
  std::vector<double> sa = quadrature::survival(a.density, h);
  std::vector<double> sb = quadrature::survival(b.density, h);
  std::vector<double> f(sa.size(), 0.0);
  for (std::size_t i = 0; i < sa.size(); ++i) {
    const double va = std::clamp(sa[i], kUnderflowFloor, 1.0);
    const double vb = std::clamp(sb[i], kUnderflowFloor, 1.0);
    if (va < kSurvivalCut && vb < kSurvivalCut)
      continue;
    f[i] = (va - vb) * std::log(va / vb);
  }
  return quadrature::simpson(f, h);
}

WaveSample ho_reference_density(int n, double omega,
                                std::span<const double> grid) {
  if (n < 0 || n > 2)
    throw std::invalid_argument("ho_reference_density: n must be in 0..2");
  if (!(omega > 0.0))
    throw std::invalid_argument("ho_reference_density: omega must be > 0");
  WaveSample w;
  w.grid.assign(grid.begin(), grid.end());
  w.amplitude.resize(grid.size());
  w.density.resize(grid.size());
  const double norm0 = std::pow(omega / M_PI, 0.25);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double y = std::sqrt(omega) * grid[i];
    double hermite;
    switch (n) {
    case 0: hermite = 1.0; break;
    case 1: hermite = 2.0 * y; break;
    default: hermite = 4.0 * y * y - 2.0; break;
    }
    const double fact = n == 0 ? 1.0 : (n == 1 ? 2.0 : 8.0); // 2^n n!
    const double a =
        norm0 / std::sqrt(fact) * hermite * std::exp(-0.5 * y * y);
    w.amplitude[i] = a;
    w.density[i] = a * a;
  }
  return w;
}

double default_ho_omega(double lambda) {
  return lambda < 0.0 ? 2.0 * std::sqrt(-lambda) : std::sqrt(2.0);
}

} // namespace qsix::infotheory
