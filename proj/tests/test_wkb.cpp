#include <doctest.h>

#include <cmath>

#include "qsix/errors.hpp"
#include "qsix/lagrange_mesh.hpp"
#include "qsix/wkb.hpp"

#include "oracles.hpp"

using namespace qsix;

namespace {

ModelParams at(double lambda) {
  ModelParams p;
  p.lambda = lambda;
  return p;
}

} // namespace

TEST_SUITE_BEGIN("wkb");

TEST_CASE("rescaled potential landmarks") {
  CHECK(wkb::rescaled_potential(0.0) == 0.0);
  CHECK(std::abs(wkb::rescaled_potential(std::sqrt(2.0))) < 1e-12);
  const double ymin =
      oracles::minimize([](double y) { return wkb::rescaled_potential(y); },
                        0.5, 2.0);
  CHECK(ymin * ymin == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-6));
  CHECK(wkb::rescaled_potential(ymin) ==
        doctest::Approx(wkb::rescaled_minimum).epsilon(1e-12));
  CHECK(wkb::rescaled_minimum ==
        doctest::Approx(-8.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-15));
}

TEST_CASE("leading-order quantization sits in the trapped band") {
  const WkbResult r = wkb::quantize(0, 50.0, ActionOrder::LeadingOrder);
  CHECK(r.epsilon > wkb::rescaled_minimum);
  CHECK(r.epsilon < 0.0);
  CHECK(r.energy < 0.0);
  // turning points solve y^6 - 4y^2 = 2 eps
  for (double y : {r.y1, r.y2})
    CHECK(std::abs(std::pow(y, 6) - 4.0 * y * y - 2.0 * r.epsilon) < 1e-10);
  CHECK_THROWS_AS(wkb::quantize(0, 5.0, ActionOrder::LeadingOrder),
                  std::invalid_argument);
}

TEST_CASE("rescaled level becomes coupling-independent") {
  const double e4 = wkb::quantize(0, 1e4, ActionOrder::LeadingOrder).epsilon;
  const double e6 = wkb::quantize(0, 1e6, ActionOrder::LeadingOrder).epsilon;
  CHECK(std::abs(e4 - e6) < 1e-3);
  CHECK(e6 < e4);          // monotone approach to the well bottom
  CHECK(e6 > wkb::rescaled_minimum);
}

TEST_CASE("quantized levels increase in n") {
  double prev = -1e9;
  for (int n = 0; n < 4; ++n) {
    const double eps = wkb::quantize(n, 1e4, ActionOrder::LeadingOrder).epsilon;
    CHECK(eps > prev);
    prev = eps;
  }
}

TEST_CASE("full-potential quantization against the mesh") {
  const WkbResult r = wkb::quantize(0, 100.0);
  const MeshResult m = lagrange_mesh::mesh_solve(
      at(100.0), MeshConfig::defaults_for(at(100.0)), 2);
  CHECK(std::abs(r.energy - m.energies[0]) / std::abs(m.energies[0]) < 0.05);
}

TEST_CASE("untrapped state is refused") {
  // the rescaled well holds levels only up to n + 1/2 <= lambda/2
  CHECK_THROWS_AS(wkb::quantize(6, 10.0, ActionOrder::LeadingOrder),
                  NumericsError);
  CHECK_NOTHROW(wkb::quantize(4, 10.0, ActionOrder::LeadingOrder));
}

TEST_CASE("barrier action behavior") {
  // monotone decrease of the action in epsilon over the band
  double prev = 1e300;
  for (double eps = -1.5; eps < -0.05; eps += 0.13) {
    const auto [action, estimate] = wkb::splitting(eps);
    CHECK(action >= 0.0);
    CHECK(action < prev);
    CHECK(estimate == doctest::Approx(std::exp(-action)));
    prev = action;
  }

  // near the barrier top the action vanishes and the estimate approaches 1
  const auto [top_action, top_estimate] = wkb::splitting(-1e-6);
  CHECK(top_action < 1e-4);
  CHECK(top_estimate > 0.999);

  // oracle comparison at a generic band point: direct adaptive integral of
  // sqrt(y^6 - 4 y^2 - 2 eps) between the inner turning points
  const double eps = -0.8;
  const auto [action, unused] = wkb::splitting(eps);
  // inner turning point from bisection on y^6 - 4y^2 - 2 eps
  double lo = 0.0, hi = std::sqrt(2.0);
  for (int it = 0; it < 120; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double v = std::pow(mid, 6) - 4.0 * mid * mid - 2.0 * eps;
    (v > 0.0 ? lo : hi) = mid;
  }
  const double y1 = 0.5 * (lo + hi);
  const double direct = 2.0 * oracles::integrate(
                                  [&](double y) {
                                    const double f = std::pow(y, 6) -
                                                     4.0 * y * y - 2.0 * eps;
                                    return std::sqrt(std::max(f, 0.0));
                                  },
                                  0.0, y1, 1e-11);
  CHECK(action == doctest::Approx(direct).epsilon(1e-6));

  // maximal near the well bottom
  const auto [deep, deep_est] = wkb::splitting(wkb::rescaled_minimum + 1e-9);
  CHECK(deep > action);
  CHECK_THROWS_AS(wkb::splitting(0.5), std::invalid_argument);
  CHECK_THROWS_AS(wkb::splitting(-2.0), std::invalid_argument);
}

TEST_CASE("harmonic limit for large negative coupling") {
  CHECK(wkb::harmonic_limit(0, -100.0) == doctest::Approx(10.0));
  CHECK_THROWS_AS(wkb::harmonic_limit(0, 1.0), std::invalid_argument);

  const MeshResult m100 = lagrange_mesh::mesh_solve(
      at(-100.0), MeshConfig::defaults_for(at(-100.0)), 2);
  CHECK(std::abs(wkb::harmonic_limit(0, -100.0) / m100.energies[0] - 1.0) <
        0.03);

  const MeshResult m1e4 = lagrange_mesh::mesh_solve(
      at(-1e4), MeshConfig::defaults_for(at(-1e4)), 2);
  CHECK(std::abs(wkb::harmonic_limit(1, -1e4) / m1e4.energies[1] - 1.0) <
        0.005);
}

TEST_CASE("mesh ratios approach the asymptotic laws") {
  double prev = -1e300;
  double last = 0.0;
  for (double lam : {-10.0, -100.0, -1000.0, -10000.0}) {
    const MeshResult m = lagrange_mesh::mesh_solve(
        at(lam), MeshConfig::defaults_for(at(lam)), 1);
    last = m.energies[0] / std::sqrt(-lam);
    CHECK(last > prev);
    prev = last;
  }
  CHECK(std::abs(last - 1.0) < 0.01);

  for (double lam : {100.0, 1000.0}) {
    const MeshResult m = lagrange_mesh::mesh_solve(
        at(lam), MeshConfig::defaults_for(at(lam)), 1);
    const double eps = m.energies[0] / std::pow(lam, 1.5);
    CHECK(eps > wkb::rescaled_minimum);
    CHECK(eps < 0.0);
  }
}

TEST_SUITE_END();
