#include <doctest.h>

#include <cmath>
#include <vector>

#include "qsix/errors.hpp"
#include "qsix/infotheory.hpp"
#include "qsix/momentum.hpp"
#include "qsix/quadrature.hpp"
#include "qsix/variational.hpp"

#include "oracles.hpp"

using namespace qsix;
namespace info = qsix::infotheory;

namespace {

ModelParams at(double lambda) {
  ModelParams p;
  p.lambda = lambda;
  return p;
}

WaveSample gaussian_density(const std::vector<double>& grid, double mean,
                            double variance) {
  WaveSample w;
  w.grid = grid;
  w.amplitude.resize(grid.size());
  w.density.resize(grid.size());
  const double norm = 1.0 / std::sqrt(2.0 * M_PI * variance);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    w.density[i] =
        norm * std::exp(-0.5 * (grid[i] - mean) * (grid[i] - mean) / variance);
    w.amplitude[i] = std::sqrt(w.density[i]);
  }
  return w;
}

WaveSample position_density(const EigenState& st,
                            const std::vector<double>& grid) {
  return variational::evaluate_wavefunction(st, grid);
}

WaveSample momentum_density(const EigenState& st) {
  const auto pgrid = momentum::default_momentum_grid(st);
  const MomentumSample m = momentum::transform_quadrature(st, pgrid);
  WaveSample w;
  w.grid = m.grid;
  w.amplitude = m.amplitude;
  w.density = m.density;
  return w;
}

const std::vector<double>& xgrid() {
  static const std::vector<double> g = quadrature::uniform_grid(8.0, 1.0 / 512.0);
  return g;
}

} // namespace

TEST_SUITE_BEGIN("infotheory");

TEST_CASE("gaussian pair saturates both bounds") {
  // |psi|^2 of the unit-frequency oscillator ground state in both spaces
  const WaveSample g = gaussian_density(xgrid(), 0.0, 0.5);
  const MeasureReport r = info::measure(g, g);
  CHECK(r.heisenberg == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(r.s_t == doctest::Approx(1.0 + std::log(M_PI)).epsilon(1e-10));
  CHECK(std::abs(r.mean_x) < 1e-12);
  CHECK(r.delta_x == doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
}

TEST_CASE("single-well edge state nearly saturates the bounds") {
  const SpectrumResult s = variational::solve(at(-0.75));
  const MeasureReport r = info::measure(position_density(s.states[0], xgrid()),
                                        momentum_density(s.states[0]));
  CHECK(std::abs(r.heisenberg - 0.5) / 0.5 < 0.02);
  const double bbm = 1.0 + std::log(M_PI);
  CHECK(std::abs(r.s_t - bbm) / bbm < 0.02);
  CHECK(std::abs(r.mean_x) < 1e-10);
  CHECK(std::abs(r.mean_p) < 1e-10);
}

TEST_CASE("wide paired states stay informationally distinct at lambda = 6") {
  const SpectrumResult s = variational::solve(at(6.0));
  const MeasureReport r2 = info::measure(position_density(s.states[2], xgrid()),
                                         momentum_density(s.states[2]));
  const MeasureReport r3 = info::measure(position_density(s.states[3], xgrid()),
                                         momentum_density(s.states[3]));
  const double rel_dx =
      std::abs(r2.delta_x - r3.delta_x) / std::max(r2.delta_x, r3.delta_x);
  CHECK(rel_dx < 0.03);
  CHECK(std::abs(r2.s_x - r3.s_x) > rel_dx);
}

TEST_CASE("normalization drift is rejected") {
  WaveSample g = gaussian_density(xgrid(), 0.0, 0.5);
  WaveSample bad = g;
  for (double& v : bad.density)
    v *= 1.001;
  CHECK_THROWS_AS(info::measure(bad, g), NumericsError);
}

TEST_CASE("kl divergence basics") {
  const WaveSample g = gaussian_density(xgrid(), 0.0, 1.0);
  CHECK(info::kl_divergence(g, g).kl < 1e-12);

  const double mu = 1.3;
  const WaveSample a = gaussian_density(xgrid(), 0.0, 1.0);
  const WaveSample b = gaussian_density(xgrid(), mu, 1.0);
  CHECK(info::kl_divergence(a, b).kl ==
        doctest::Approx(mu * mu / 2.0).epsilon(1e-8));

  WaveSample truncated = g;
  for (std::size_t i = 0; i < xgrid().size(); ++i)
    if (std::abs(xgrid()[i]) > 4.0)
      truncated.density[i] = 0.0;
  CHECK(info::kl_divergence(g, truncated).kl_near_singular);

  WaveSample other = g;
  other.grid[3] += 1e-6;
  CHECK_THROWS_AS(info::kl_divergence(g, other), std::invalid_argument);
}

TEST_CASE("kl across the pairing transition decreases") {
  const auto rho = [&](double lam, int n) {
    const SpectrumResult s = variational::solve(at(lam));
    return position_density(s.states[n], xgrid());
  };
  const double k0 = info::kl_divergence(rho(0.0, 1), rho(0.0, 0)).kl;
  const double k6 = info::kl_divergence(rho(6.0, 1), rho(6.0, 0)).kl;
  CHECK(k6 < k0);
  CHECK(k6 < 1e-3);
}

TEST_CASE("crj divergence basics") {
  const WaveSample g = gaussian_density(xgrid(), 0.0, 0.7);
  CHECK(info::crj_divergence(g, g) < 1e-12);
  const WaveSample b = gaussian_density(xgrid(), 0.4, 1.1);
  const double ab = info::crj_divergence(g, b);
  const double ba = info::crj_divergence(b, g);
  CHECK(ab > 0.0);
  CHECK(ab == doctest::Approx(ba).epsilon(1e-12));
}

TEST_CASE("nonnegativity on randomized smooth densities") {
  oracles::Lcg rng(20240817u);
  const auto& grid = xgrid();
  auto random_density = [&] {
    WaveSample w;
    w.grid = grid;
    w.amplitude.resize(grid.size());
    w.density.assign(grid.size(), 0.0);
    for (int b = 0; b < 3; ++b) {
      const double mean = rng.uniform(-2.0, 2.0);
      const double var = rng.uniform(0.2, 2.0);
      const double weight = rng.uniform(0.1, 1.0);
      for (std::size_t i = 0; i < grid.size(); ++i)
        w.density[i] += weight * std::exp(-0.5 * (grid[i] - mean) *
                                          (grid[i] - mean) / var);
    }
    const double norm = quadrature::simpson(w.density, 1.0 / 512.0);
    for (double& v : w.density)
      v /= norm;
    return w;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const WaveSample a = random_density();
    const WaveSample b = random_density();
    CHECK(info::kl_divergence(a, b).kl >= -1e-12);
    const double ab = info::crj_divergence(a, b);
    CHECK(ab >= -1e-12);
    CHECK(info::crj_divergence(b, a) == doctest::Approx(ab).epsilon(1e-12));
  }
}

TEST_CASE("harmonic reference densities") {
  const WaveSample h0 = info::ho_reference_density(0, 1.0, xgrid());
  // ground state with omega = 1: gaussian of variance 1/2
  const WaveSample g = gaussian_density(xgrid(), 0.0, 0.5);
  double worst = 0.0;
  for (std::size_t i = 0; i < xgrid().size(); ++i)
    worst = std::max(worst, std::abs(h0.density[i] - g.density[i]));
  CHECK(worst < 1e-12);
  CHECK(info::crj_divergence(h0, h0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(quadrature::simpson(info::ho_reference_density(2, 1.7, xgrid()).density,
                            1.0 / 512.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(info::ho_reference_density(3, 1.0, xgrid()),
                  std::invalid_argument);
  CHECK_THROWS_AS(info::ho_reference_density(0, 0.0, xgrid()),
                  std::invalid_argument);
}

TEST_CASE("deep single-well limit approaches its harmonic reference") {
  auto crj_vs_ho = [&](double lam) {
    const SpectrumResult s = variational::solve(at(lam));
    const double omega = info::default_ho_omega(lam);
    const WaveSample ho = info::ho_reference_density(0, omega, xgrid());
    return info::crj_divergence(position_density(s.states[0], xgrid()), ho);
  };
  const double shallow = crj_vs_ho(-0.75);
  const double deep = crj_vs_ho(-3.0);
  CHECK(std::isfinite(shallow));
  CHECK(deep < shallow);
}

TEST_CASE("entropy of a sampled gaussian matches the closed form") {
  const double variance = 0.8;
  const WaveSample g = gaussian_density(xgrid(), 0.0, variance);
  const double exact = 0.5 * std::log(2.0 * M_PI * M_E * variance);
  CHECK(info::shannon_entropy(g.density, 1.0 / 512.0) ==
        doctest::Approx(exact).epsilon(1e-10));
}

TEST_SUITE_END();
