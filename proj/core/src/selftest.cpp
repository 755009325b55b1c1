#include "qsix/selftest.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "qsix/errors.hpp"
#include "qsix/infotheory.hpp"
#include "qsix/lagrange_mesh.hpp"
#include "qsix/momentum.hpp"
#include "qsix/potential.hpp"
#include "qsix/qes_exact.hpp"
#include "qsix/quadrature.hpp"
#include "qsix/scans.hpp"
#include "qsix/variational.hpp"
#include "qsix/wkb.hpp"

namespace qsix::selftest {
namespace {

struct Check {
  std::string name;
  std::function<bool()> run;
};

bool potential_invariants() {
  ModelParams p;
  bool ok = true;
  for (double lam : {-0.75, -0.2, 0.0, 1.0, 6.0}) {
    p.lambda = lam;
    for (double x = 0.0; x <= 4.0; x += 0.37)
      ok &= potential::evaluate(p, x) == potential::evaluate(p, -x);
    const WellGeometry g = potential::geometry(p);
    ok &= g.is_double_well == (lam > -0.5);
    if (g.is_double_well) {
      ok &= g.minima_value < 0.0;
      ok &= std::abs(potential::derivative(p, g.x_plus)) < 1e-12;
    }
  }
  // asymptote: relative error of x_plus vs sqrt(2)(lambda/3)^{1/4} shrinks
  double prev = 1.0;
  for (double lam : {10.0, 100.0, 1000.0, 10000.0}) {
    p.lambda = lam;
    const double xp = potential::geometry(p).x_plus;
    const double rel =
        std::abs(xp / potential::asymptotic_minimum(lam) - 1.0);
    ok &= rel < prev;
    prev = rel;
  }
  return ok;
}

bool quadrature_invariants() {
  bool ok = true;
  const QuadratureRule rule = quadrature::build_rule(6.0, 64, 16);
  ok &= std::abs(rule.integrate([](double) { return 1.0; }) - 12.0) < 1e-12;
  ok &= std::abs(rule.integrate([](double x) { return x * x * x; })) < 1e-13;
  for (int q : {0, 2, 8, 20}) {
    const double closed = quadrature::weight_moment(q, 0.25);
    const double numeric = rule.integrate(
        [&](double x) { return std::pow(x, q) * std::exp(-0.5 * x * x * x * x); });
    ok &= std::abs(numeric / closed - 1.0) < 1e-11;
  }
  return ok;
}

bool variational_invariants() {
  bool ok = true;
  ModelParams p;
  p.lambda = 0.0;
  ok &= std::abs(variational::solve(p).states[0].energy - 0.5) < 1e-9;
  p.lambda = 1.0;
  const SpectrumResult s1 = variational::solve(p);
  ok &= std::abs(s1.states[0].energy - (1.5 - std::sqrt(3.0))) < 1e-8;
  ok &= std::abs(s1.states[2].energy - (1.5 + std::sqrt(3.0))) < 1e-8;
  p.lambda = 0.5;
  ok &= std::abs(variational::solve(p).states[1].energy - 1.5) < 1e-8;
  // ordering + parity alternation over a small grid
  for (double lam : {-0.75, 0.25, 3.0, 6.0}) {
    p.lambda = lam;
    const SpectrumResult s = variational::solve(p);
    for (int n = 0; n < 3; ++n)
      ok &= s.states[n].energy < s.states[n + 1].energy;
    for (int n = 0; n < 4; ++n)
      ok &= s.states[n].parity ==
            (n % 2 == 0 ? Parity::Even : Parity::Odd);
  }
  return ok;
}

bool qes_exact_invariants() {
  bool ok = true;
  for (double lam : {1.0, 2.0, 3.0, 6.0}) {
    const AlgebraicSector sec = qes_exact::build_sector(lam);
    const AlgebraicSector ref = qes_exact::reflection_partner(lam);
    double trace = 0.0, esum = 0.0;
    for (int i = 0; i <= sec.n_max; ++i) {
      trace += sec.matrix(i, i);
      esum += sec.eigenvalues[i];
      ok &= std::abs(sec.eigenvalues[i] +
                     ref.eigenvalues[sec.n_max - i]) < 1e-10;
    }
    ok &= std::abs(trace - esum) < 1e-10;
    ModelParams p;
    p.lambda = lam;
    const SpectrumResult var = variational::solve(p);
    ok &= std::abs(sec.eigenvalues[0] - var.states[0].energy) <
          1e-8 * std::max(1.0, std::abs(sec.eigenvalues[0]));
  }
  return ok;
}

bool mesh_invariants() {
  bool ok = true;
  const MeshResult harm = lagrange_mesh::harmonic_reference(60, 1.0, 6);
  for (int n = 0; n < 6; ++n)
    ok &= std::abs(harm.energies[n] - (n + 0.5)) < 1e-11;
  ModelParams p;
  p.lambda = 1.0;
  const MeshResult m =
      lagrange_mesh::mesh_solve(p, MeshConfig::defaults_for(p, 60), 4);
  ok &= std::abs(m.energies[0] - (1.5 - std::sqrt(3.0))) < 1e-10;
  const SpectrumResult var = variational::solve(p);
  for (int n = 0; n < 4; ++n)
    ok &= m.energies[n] <= var.states[n].energy + 1e-10;
  return ok;
}

bool momentum_invariants() {
  bool ok = true;
  ModelParams p;
  p.lambda = 1.0;
  const SpectrumResult s = variational::solve(p);
  for (int n : {0, 1}) {
    const auto pgrid = momentum::default_momentum_grid(s.states[n]);
    const MomentumSample q =
        momentum::transform_quadrature(s.states[n], pgrid);
    double asym = 0.0;
    for (std::size_t i = 0; i < q.grid.size(); ++i)
      asym = std::max(asym, std::abs(q.density[i] -
                                     q.density[q.grid.size() - 1 - i]));
    ok &= asym < 1e-12;
    const double norm = quadrature::simpson(q.density, 0.01);
    ok &= std::abs(norm - 1.0) < 1e-9;
    for (std::size_t i = 0; i < q.grid.size(); i += 40) {
      if (std::abs(q.grid[i]) > 6.0)
        continue; // beyond the series cancellation budget
      try {
        const auto sv = momentum::transform_series(
            s.states[n], std::span<const double>(&q.grid[i], 1));
        ok &= std::abs(sv.amplitude[0] - q.amplitude[i]) < 1e-9;
      } catch (const CancellationError&) {
        // guard refusal near a transform zero; quadrature covers it
      }
    }
  }
  return ok;
}

bool infotheory_invariants() {
  bool ok = true;
  const auto grid = quadrature::uniform_grid(8.0, 1.0 / 512.0);
  WaveSample g;
  g.grid = grid;
  g.density.resize(grid.size());
  g.amplitude.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double a = std::pow(M_PI, -0.25) * std::exp(-0.5 * grid[i] * grid[i]);
    g.amplitude[i] = a;
    g.density[i] = a * a;
  }
  const MeasureReport r = infotheory::measure(g, g);
  ok &= std::abs(r.heisenberg - 0.5) < 1e-10;
  ok &= std::abs(r.s_t - (1.0 + std::log(M_PI))) < 1e-10;
  ok &= infotheory::kl_divergence(g, g).kl < 1e-12;
  ok &= infotheory::crj_divergence(g, g) < 1e-12;
  return ok;
}

bool wkb_invariants() {
  bool ok = true;
  ok &= wkb::rescaled_potential(0.0) == 0.0;
  ok &= std::abs(wkb::rescaled_potential(std::sqrt(2.0))) < 1e-12;
  // quantized eps strictly increasing in n; action decreasing in eps
  const WkbResult e0 = wkb::quantize(0, 1e4, ActionOrder::LeadingOrder);
  const WkbResult e1 = wkb::quantize(1, 1e4, ActionOrder::LeadingOrder);
  ok &= e0.epsilon < e1.epsilon && e0.epsilon > wkb::rescaled_minimum;
  double prev_action = 1e300;
  for (double eps = -1.4; eps < -0.1; eps += 0.13) {
    const auto [act, est] = wkb::splitting(eps);
    ok &= act >= 0.0 && act < prev_action;
    prev_action = act;
  }
  ok &= std::abs(wkb::harmonic_limit(0, -100.0) - 10.0) < 1e-12;
  return ok;
}

bool scans_invariants() {
  ScanSpec spec;
  spec.lambda_min = 0.0;
  spec.lambda_max = 1.0;
  spec.step = 0.5;
  spec.states = {0, 1};
  const ResultTable a = scans::run_scan(spec);
  const ResultTable b = scans::run_scan(spec);
  if (a.rows.size() != 6 || b.rows.size() != 6)
    return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    if (a.rows[i] != b.rows[i])
      return false;
  const CriticalCoupling c = scans::find_critical(0, 0.5, 1.0);
  return std::abs(c.lambda_c - 0.7329531) < 1e-5 && c.residual < 1e-9;
}

} // namespace

int run_all(std::ostream& out) {
  const std::vector<Check> checks = {
      {"potential", potential_invariants},
      {"quadrature", quadrature_invariants},
      {"variational", variational_invariants},
      {"qes_exact", qes_exact_invariants},
      {"lagrange_mesh", mesh_invariants},
      {"momentum", momentum_invariants},
      {"infotheory", infotheory_invariants},
      {"wkb", wkb_invariants},
      {"scans", scans_invariants},
  };
  int failures = 0;
  for (const auto& c : checks) {
    bool ok = false;
    std::string err;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      err = e.what();
    }
    out << (ok ? "PASS " : "FAIL ") << c.name;
    if (!ok && !err.empty())
      out << " (" << err << ")";
    out << '\n';
    if (!ok)
      ++failures;
  }
  return failures;
}

} // namespace qsix::selftest
