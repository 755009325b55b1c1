#include "qsix/scans.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "qsix/errors.hpp"
#include "qsix/infotheory.hpp"
#include "qsix/momentum.hpp"
#include "qsix/potential.hpp"
#include "qsix/quadrature.hpp"
#include "qsix/variational.hpp"

namespace qsix {

std::optional<Quantity> parse_quantity(const std::string& name) {
  static const std::map<std::string, Quantity> lut = {
      {"energy", Quantity::Energy},     {"dx", Quantity::DeltaX},
      {"dp", Quantity::DeltaP},         {"sx", Quantity::Sx},
      {"sp", Quantity::Sp},             {"st", Quantity::St},
      {"heisenberg", Quantity::Heisenberg},
      {"kl_pairs", Quantity::KlPairs},  {"crj_pairs", Quantity::CrjPairs},
      {"crj_ho", Quantity::CrjHo},
  };
  const auto it = lut.find(name);
  if (it == lut.end())
    return std::nullopt;
  return it->second;
}

const char* to_string(Quantity q) {
  switch (q) {
  case Quantity::Energy: return "energy";
  case Quantity::DeltaX: return "dx";
  case Quantity::DeltaP: return "dp";
  case Quantity::Sx: return "sx";
  case Quantity::Sp: return "sp";
  case Quantity::St: return "st";
  case Quantity::Heisenberg: return "heisenberg";
  case Quantity::KlPairs: return "kl_pairs";
  case Quantity::CrjPairs: return "crj_pairs";
  case Quantity::CrjHo: return "crj_ho";
  }
  return "?";
}

void ScanSpec::validate() const {
  if (!(step > 0.0))
    throw UsageError("scan: step must be > 0");
  if (!(lambda_min < lambda_max))
    throw UsageError("scan: lambda_min must be below lambda_max");
  if (states.empty())
    throw UsageError("scan: at least one state index required");
  for (int n : states)
    if (n < 0)
      throw UsageError("scan: state indices must be >= 0");
}

namespace scans {
namespace {

bool needs_position(const std::vector<Quantity>& qs) {
  for (Quantity q : qs)
    switch (q) {
    case Quantity::DeltaX:
    case Quantity::Sx:
    case Quantity::St:
    case Quantity::Heisenberg:
    case Quantity::KlPairs:
    case Quantity::CrjPairs:
    case Quantity::CrjHo:
      return true;
    default:
      break;
    }
  return false;
}

bool needs_momentum(const std::vector<Quantity>& qs) {
  for (Quantity q : qs)
    switch (q) {
    case Quantity::DeltaP:
    case Quantity::Sp:
    case Quantity::St:
    case Quantity::Heisenberg:
      return true;
    default:
      break;
    }
  return false;
}

} // namespace

// Shared per-lambda analysis context: densities on common grids.
struct StateAnalysis {
  ModelParams params;
  SpectrumResult spectrum;
  std::vector<double> xgrid;
  std::map<int, WaveSample> position;   // by state index
  std::map<int, WaveSample> momentum_d; // by state index
  std::map<int, MeasureReport> reports;

  static std::vector<double> position_grid(const ModelParams& params) {
    const WellGeometry g = potential::geometry(params);
    const double L = std::max(6.5, g.x_plus + 4.5);
    return quadrature::uniform_grid(L, 1.0 / 512.0);
  }

  StateAnalysis(const ModelParams& p, int k_even, int k_odd,
                const std::vector<int>& states, bool want_position,
                bool want_momentum, double tol_quad)
      : params(p) {
    spectrum = variational::solve(params, k_even, k_odd);
    for (int n : states)
      if (n >= static_cast<int>(spectrum.states.size()))
        throw NumericsError("scan: state index " + std::to_string(n) +
                            " beyond the computed spectrum");
    if (!want_position && !want_momentum)
      return;
    xgrid = position_grid(params);
    for (int n : states) {
      const EigenState& st = spectrum.states[n];
      if (want_position)
        position[n] = variational::evaluate_wavefunction(st, xgrid);
      if (want_momentum) {
        const auto pgrid = momentum::default_momentum_grid(st, tol_quad);
        momentum_d[n] = [&] {
          const MomentumSample m = momentum::transform_quadrature(st, pgrid);
          WaveSample w;
          w.grid = m.grid;
          w.amplitude = m.amplitude;
          w.density = m.density;
          return w;
        }();
      }
    }
  }

  const MeasureReport& report(int n) {
    const auto it = reports.find(n);
    if (it != reports.end())
      return it->second;
    return reports.emplace(n, infotheory::measure(position.at(n),
                                                  momentum_d.at(n)))
        .first->second;
  }
};

ResultTable run_scan(const ScanSpec& spec) {
  spec.validate();
  ResultTable t;
  t.columns = {"lambda", "n", "parity"};
  for (Quantity q : spec.quantities)
    t.columns.push_back(to_string(q));
  t.columns.push_back("status");

  if (spec.quantities.empty())
    return t; // header-only output

  const bool want_pos = needs_position(spec.quantities);
  const bool want_mom = needs_momentum(spec.quantities);

  std::vector<int> wanted = spec.states;
  std::sort(wanted.begin(), wanted.end());
  // pair quantities need the partner state computed as well
  std::vector<int> to_compute = wanted;
  for (Quantity q : spec.quantities)
    if (q == Quantity::KlPairs || q == Quantity::CrjPairs)
      for (int n : wanted) {
        to_compute.push_back(n % 2 == 0 ? n + 1 : n - 1);
      }
  std::sort(to_compute.begin(), to_compute.end());
  to_compute.erase(std::unique(to_compute.begin(), to_compute.end()),
                   to_compute.end());
  to_compute.erase(std::remove_if(to_compute.begin(), to_compute.end(),
                                  [](int n) { return n < 0; }),
                   to_compute.end());

  const int steps =
      static_cast<int>(std::floor((spec.lambda_max - spec.lambda_min) /
                                  spec.step * (1.0 + 1e-12))) +
      1;
  for (int i = 0; i < steps; ++i) {
    const double lam = spec.lambda_min + i * spec.step;
    ModelParams params;
    params.lambda = lam;
    params.tol_quad = spec.tol_quad;
    try {
      std::optional<StateAnalysis> an;
      std::optional<MeshResult> mesh;
      if (spec.solver == SolverKind::Variational || want_pos || want_mom)
        an.emplace(params, spec.k_even, spec.k_odd, to_compute,
                   want_pos || want_mom, want_mom, spec.tol_quad);
      if (spec.solver == SolverKind::Mesh) {
        MeshConfig cfg = MeshConfig::defaults_for(params, spec.mesh_size);
        if (spec.mesh_scale > 0.0)
          cfg.scale = spec.mesh_scale;
        const int count = *std::max_element(wanted.begin(), wanted.end()) + 1;
        mesh = lagrange_mesh::mesh_solve(params, cfg, count);
      }

      for (int n : wanted) {
        std::vector<Cell> row;
        row.emplace_back(lam);
        row.emplace_back(static_cast<std::int64_t>(n));
        const Parity parity = mesh ? mesh->parities[n]
                                   : an->spectrum.states[n].parity;
        row.emplace_back(std::string(to_string(parity)));
        for (Quantity q : spec.quantities) {
          switch (q) {
          case Quantity::Energy:
            row.emplace_back(mesh ? mesh->energies[n]
                                  : an->spectrum.states[n].energy);
            break;
          case Quantity::DeltaX:
            row.emplace_back(an->report(n).delta_x);
            break;
          case Quantity::DeltaP:
            row.emplace_back(an->report(n).delta_p);
            break;
          case Quantity::Sx:
            row.emplace_back(an->report(n).s_x);
            break;
          case Quantity::Sp:
            row.emplace_back(an->report(n).s_p);
            break;
          case Quantity::St:
            row.emplace_back(an->report(n).s_t);
            break;
          case Quantity::Heisenberg:
            row.emplace_back(an->report(n).heisenberg);
            break;
          case Quantity::KlPairs:
            if (n % 2 == 0)
              row.emplace_back(
                  infotheory::kl_divergence(an->position.at(n + 1),
                                            an->position.at(n))
                      .kl);
            else
              row.emplace_back(Cell{});
            break;
          case Quantity::CrjPairs:
            if (n % 2 == 0)
              row.emplace_back(infotheory::crj_divergence(
                  an->position.at(n), an->position.at(n + 1)));
            else
              row.emplace_back(Cell{});
            break;
          case Quantity::CrjHo: {
            if (n <= 2) {
              const double omega = spec.ho_omega > 0.0
                                       ? spec.ho_omega
                                       : infotheory::default_ho_omega(lam);
              const WaveSample ho =
                  infotheory::ho_reference_density(n, omega, an->xgrid);
              row.emplace_back(
                  infotheory::crj_divergence(an->position.at(n), ho));
            } else {
              row.emplace_back(Cell{});
            }
            break;
          }
          }
        }
        row.emplace_back(std::string("ok"));
        t.add_row(std::move(row));
      }
    } catch (const NumericsError& e) {
      // flagged rows keep long sweeps alive through isolated failures
      for (int n : wanted) {
        std::vector<Cell> row;
        row.emplace_back(lam);
        row.emplace_back(static_cast<std::int64_t>(n));
        row.emplace_back(Cell{});
        for (std::size_t q = 0; q < spec.quantities.size(); ++q)
          row.emplace_back(Cell{});
        row.emplace_back(std::string("failed: ") + e.what());
        t.add_row(std::move(row));
      }
    }
  }
  return t;
}

CriticalCoupling find_critical(int n, double lo, double hi, int k_even,
                               int k_odd) {
  if (n < 0)
    throw std::invalid_argument("find_critical: n must be >= 0");
  if (!(lo < hi))
    throw std::invalid_argument("find_critical: empty bracket");

  auto energy = [&](double lam) {
    ModelParams p;
    p.lambda = lam;
    const SpectrumResult s = variational::solve(p, k_even, k_odd);
    return s.states.at(n).energy;
  };

  double fa = energy(lo), fb = energy(hi);
  if (!(fa > 0.0 && fb < 0.0))
    throw NumericsError("find_critical: E_n does not change sign from + to - "
                        "inside the bracket");

  // Brent's method
  double a = lo, b = hi, c = a, fc = fa;
  double d = b - a, e = d;
  for (int it = 0; it < 200; ++it) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * 1e-14;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0)
      break;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0)
        q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q),
                             std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : (xm > 0 ? tol1 : -tol1);
    fb = energy(b);
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }

  CriticalCoupling res;
  res.n = n;
  res.lambda_c = b;
  res.bracket_lo = lo;
  res.bracket_hi = hi;
  res.residual = std::abs(energy(b));
  if (res.residual >= 1e-9)
    throw NumericsError("find_critical: residual " +
                        std::to_string(res.residual) + " above 1e-9");
  return res;
}

PairingReport pairing_report(const ModelParams& params, int k_even,
                             int k_odd) {
  params.validate();
  const SpectrumResult s = variational::solve(params, k_even, k_odd);
  const auto xgrid = StateAnalysis::position_grid(params);
  std::array<WaveSample, 4> rho;
  for (int n = 0; n < 4; ++n)
    rho[n] = variational::evaluate_wavefunction(s.states[n], xgrid);
  PairingReport r;
  r.lambda = params.lambda;
  r.gap01 = s.states[1].energy - s.states[0].energy;
  r.gap23 = s.states[3].energy - s.states[2].energy;
  r.crj01 = infotheory::crj_divergence(rho[0], rho[1]);
  r.crj23 = infotheory::crj_divergence(rho[2], rho[3]);
  return r;
}

} // namespace scans
} // namespace qsix
