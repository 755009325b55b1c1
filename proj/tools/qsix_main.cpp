// qsix command line: spectra, scans, critical couplings, entropic
// diagnostics, and semiclassical estimates for the tunable sextic
// double-well family.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsix/errors.hpp"
#include "qsix/infotheory.hpp"
#include "qsix/lagrange_mesh.hpp"
#include "qsix/momentum.hpp"
#include "qsix/potential.hpp"
#include "qsix/qes_exact.hpp"
#include "qsix/quadrature.hpp"
#include "qsix/scans.hpp"
#include "qsix/selftest.hpp"
#include "qsix/table.hpp"
#include "qsix/variational.hpp"
#include "qsix/version.hpp"
#include "qsix/wkb.hpp"

namespace {

using qsix::Cell;
using qsix::ModelParams;
using qsix::Parity;
using qsix::ResultTable;
using qsix::RunMeta;
using qsix::UsageError;

// ---------------------------------------------------------------------
// flat key = value config files; '#' starts a comment; flags win
// ---------------------------------------------------------------------

std::map<std::string, std::string> read_config(const std::string& path,
                                               const std::vector<std::string>&
                                                   known_keys) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("config: cannot open '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    const auto notblank = line.find_first_not_of(" \t\r");
    if (notblank == std::string::npos)
      continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("config: missing '=' at " + path + ":" +
                       std::to_string(lineno));
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (std::find(known_keys.begin(), known_keys.end(), key) ==
        known_keys.end())
      throw UsageError("config: unknown key '" + key + "' at " + path + ":" +
                       std::to_string(lineno));
    kv[key] = value;
  }
  return kv;
}

// ---------------------------------------------------------------------
// common option bundle shared by the subcommands
// ---------------------------------------------------------------------

struct CommonOptions {
  double lambda = 0.0;
  std::string lambda_range; // "lo,hi,step"
  std::string states = "0..3";
  int k_even = 10;
  int k_odd = 10;
  int mesh_size = 80;
  double mesh_scale = 0.0;
  double ho_omega = 0.0;
  std::string format = "csv";
  std::string out;
  std::string config_path;
  std::string quantities = "energy";
  std::string solver = "variational";
  std::string mode = "pairs";
  std::string wkb_order = "full";
  int n_state = 0;
  std::string bracket;

  CLI::Option* opt_lambda = nullptr;

  std::vector<std::pair<std::string, std::string>> echo; // effective config
};

const std::vector<std::string> kConfigKeys = {
    "lambda",    "lambda_range", "states",    "k_even", "k_odd",
    "mesh_size", "mesh_scale",   "ho_omega",  "format", "out",
    "quantities", "solver",      "mode",      "wkb_order", "n", "bracket"};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_lambda = true) {
  if (with_lambda)
    o.opt_lambda = cmd->add_option("--lambda", o.lambda, "coupling value");
  cmd->add_option("--lambda-range", o.lambda_range,
                  "sweep range as lo,hi,step");
  cmd->add_option("--states", o.states, "state list: 0..3 or 0,2,3");
  cmd->add_option("--k-even", o.k_even, "even-sector basis size");
  cmd->add_option("--k-odd", o.k_odd, "odd-sector basis size");
  cmd->add_option("--mesh-size", o.mesh_size, "mesh points");
  cmd->add_option("--mesh-scale", o.mesh_scale,
                  "mesh coordinate scale (0 = automatic)");
  cmd->add_option("--ho-omega", o.ho_omega,
                  "harmonic reference frequency (0 = rule of thumb)");
  cmd->add_option("--format", o.format, "csv|json")->capture_default_str();
  cmd->add_option("--out", o.out, "output path ('-' = stdout)");
  cmd->add_option("--config", o.config_path, "flat key = value config file");
}

// apply config values under the flags (flags win)
void merge_config(CLI::App* cmd, CommonOptions& o) {
  if (o.config_path.empty())
    return;
  const auto kv = read_config(o.config_path, kConfigKeys);
  auto maybe = [&](const char* flag, const char* key, auto& slot) {
    const CLI::Option* opt = cmd->get_option_no_throw(flag);
    const auto it = kv.find(key);
    if (it == kv.end() || (opt != nullptr && opt->count() > 0))
      return;
    std::istringstream is(it->second);
    is >> slot;
    if (is.fail())
      throw UsageError("config: bad value for '" + std::string(key) + "'");
  };
  maybe("--lambda", "lambda", o.lambda);
  maybe("--lambda-range", "lambda_range", o.lambda_range);
  maybe("--states", "states", o.states);
  maybe("--k-even", "k_even", o.k_even);
  maybe("--k-odd", "k_odd", o.k_odd);
  maybe("--mesh-size", "mesh_size", o.mesh_size);
  maybe("--mesh-scale", "mesh_scale", o.mesh_scale);
  maybe("--ho-omega", "ho_omega", o.ho_omega);
  maybe("--format", "format", o.format);
  maybe("--out", "out", o.out);
  maybe("--quantities", "quantities", o.quantities);
  maybe("--solver", "solver", o.solver);
  maybe("--mode", "mode", o.mode);
  maybe("--wkb-order", "wkb_order", o.wkb_order);
  maybe("--n", "n", o.n_state);
  maybe("--bracket", "bracket", o.bracket);
  // a config may carry lambda even when the flag was not passed
  if (o.opt_lambda != nullptr && o.opt_lambda->count() == 0 &&
      kv.count("lambda"))
    o.opt_lambda->add_result(kv.at("lambda"));
}

std::vector<int> parse_states(const std::string& spec) {
  std::vector<int> out;
  const auto dots = spec.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(spec.substr(0, dots));
    const int hi = std::stoi(spec.substr(dots + 2));
    if (lo > hi)
      throw UsageError("states: empty range '" + spec + "'");
    for (int n = lo; n <= hi; ++n)
      out.push_back(n);
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(std::stoi(item));
  if (out.empty())
    throw UsageError("states: empty list");
  return out;
}

std::array<double, 3> parse_triplet(const std::string& s,
                                    const char* what) {
  std::array<double, 3> v{};
  std::stringstream ss(s);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',') && i < 3)
    v[i++] = std::stod(item);
  if (i != 3)
    throw UsageError(std::string(what) + ": expected lo,hi,step");
  return v;
}

std::pair<double, double> parse_bracket(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw UsageError("bracket: expected lo,hi");
  return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

RunMeta make_meta(const std::string& command, const CommonOptions& o) {
  RunMeta meta;
  meta.command = command;
  meta.version = qsix::version_string;
  meta.config = o.echo;
  return meta;
}

void echo_common(CommonOptions& o, bool with_lambda) {
  auto num = [](double v) { return qsix::table::format_number(v); };
  if (with_lambda)
    o.echo.emplace_back("lambda", num(o.lambda));
  if (!o.lambda_range.empty())
    o.echo.emplace_back("lambda_range", o.lambda_range);
  o.echo.emplace_back("states", o.states);
  o.echo.emplace_back("k_even", std::to_string(o.k_even));
  o.echo.emplace_back("k_odd", std::to_string(o.k_odd));
  o.echo.emplace_back("mesh_size", std::to_string(o.mesh_size));
  o.echo.emplace_back("mesh_scale", num(o.mesh_scale));
  o.echo.emplace_back("ho_omega", num(o.ho_omega));
  o.echo.emplace_back("format", o.format);
}

std::string join_coefficients(const std::vector<double>& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i)
      out += ';';
    out += qsix::table::format_number(c[i]);
  }
  return out;
}

// ---------------------------------------------------------------------
// subcommand bodies
// ---------------------------------------------------------------------

int cmd_solve(CommonOptions& o) {
  ModelParams params;
  params.lambda = o.lambda;
  const auto states = parse_states(o.states);
  const qsix::SpectrumResult s =
      qsix::variational::solve(params, o.k_even, o.k_odd);
  for (const std::string& w : s.warnings)
    std::cerr << "warning: " << w << '\n';

  ResultTable t;
  t.columns = {"lambda", "n", "parity", "energy", "norm_constant",
               "coefficients"};
  for (int n : states) {
    if (n >= static_cast<int>(s.states.size()))
      throw UsageError("solve: state " + std::to_string(n) +
                       " beyond basis reach; raise --k-even/--k-odd");
    const auto& st = s.states[n];
    t.add_row({o.lambda, static_cast<std::int64_t>(n),
               std::string(to_string(st.parity)), st.energy, st.norm_constant,
               join_coefficients(st.coefficients)});
  }
  qsix::table::write_output(t, qsix::table::parse_format(o.format), o.out,
                            make_meta("solve", o));
  return 0;
}

int cmd_scan(CommonOptions& o) {
  if (o.lambda_range.empty())
    throw UsageError("scan: --lambda-range lo,hi,step is required");
  const auto [lo, hi, step] = parse_triplet(o.lambda_range, "lambda-range");
  qsix::ScanSpec spec;
  spec.lambda_min = lo;
  spec.lambda_max = hi;
  spec.step = step;
  spec.states = parse_states(o.states);
  spec.k_even = o.k_even;
  spec.k_odd = o.k_odd;
  spec.mesh_size = o.mesh_size;
  spec.mesh_scale = o.mesh_scale;
  spec.ho_omega = o.ho_omega;
  if (o.solver == "variational")
    spec.solver = qsix::SolverKind::Variational;
  else if (o.solver == "mesh")
    spec.solver = qsix::SolverKind::Mesh;
  else
    throw UsageError("scan: unknown solver '" + o.solver + "'");
  spec.quantities.clear();
  std::stringstream ss(o.quantities);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto q = qsix::parse_quantity(item);
    if (!q)
      throw UsageError("scan: unknown quantity '" + item + "'");
    spec.quantities.push_back(*q);
  }
  const ResultTable t = qsix::scans::run_scan(spec);
  qsix::table::write_output(t, qsix::table::parse_format(o.format), o.out,
                            make_meta("scan", o));
  return 0;
}

int cmd_critical(CommonOptions& o) {
  static const std::map<int, std::pair<double, double>> default_brackets = {
      {0, {0.5, 1.0}}, {1, {1.0, 2.0}}, {2, {3.0, 3.5}}, {3, {3.4, 4.2}}};
  double lo, hi;
  if (!o.bracket.empty()) {
    std::tie(lo, hi) = parse_bracket(o.bracket);
  } else {
    const auto it = default_brackets.find(o.n_state);
    if (it == default_brackets.end())
      throw UsageError("critical: --bracket lo,hi required for n > 3");
    std::tie(lo, hi) = it->second;
  }
  const qsix::CriticalCoupling c =
      qsix::scans::find_critical(o.n_state, lo, hi, o.k_even, o.k_odd);
  // one-shot mesh verification at the root
  ModelParams params;
  params.lambda = c.lambda_c;
  const qsix::MeshResult m = qsix::lagrange_mesh::mesh_solve(
      params, qsix::MeshConfig::defaults_for(params, o.mesh_size),
      o.n_state + 1);
  const double mesh_residual = std::abs(m.energies[o.n_state]);

  ResultTable t;
  t.columns = {"n",        "lambda_c",      "bracket_lo", "bracket_hi",
               "residual", "mesh_residual"};
  t.add_row({static_cast<std::int64_t>(c.n), c.lambda_c, c.bracket_lo,
             c.bracket_hi, c.residual, mesh_residual});
  qsix::table::write_output(t, qsix::table::parse_format(o.format), o.out,
                            make_meta("critical", o));
  return 0;
}

int cmd_entropy(CommonOptions& o) {
  ModelParams params;
  params.lambda = o.lambda;
  const auto states = parse_states(o.states);
  const qsix::SpectrumResult s =
      qsix::variational::solve(params, o.k_even, o.k_odd);

  const qsix::WellGeometry g = qsix::potential::geometry(params);
  const auto xgrid = qsix::quadrature::uniform_grid(
      std::max(6.5, g.x_plus + 4.5), 1.0 / 512.0);

  ResultTable t;
  t.columns = {"lambda", "n",  "parity",     "dx",     "dp",    "sx",
               "sp",     "st", "heisenberg", "mean_x", "mean_p"};
  for (int n : states) {
    const auto& st = s.states.at(n);
    const qsix::WaveSample pos =
        qsix::variational::evaluate_wavefunction(st, xgrid);
    const auto pgrid = qsix::momentum::default_momentum_grid(st);
    const qsix::MomentumSample mom =
        qsix::momentum::transform_quadrature(st, pgrid);
    qsix::WaveSample momw;
    momw.grid = mom.grid;
    momw.amplitude = mom.amplitude;
    momw.density = mom.density;
    const qsix::MeasureReport r = qsix::infotheory::measure(pos, momw);
    t.add_row({o.lambda, static_cast<std::int64_t>(n),
               std::string(to_string(st.parity)), r.delta_x, r.delta_p, r.s_x,
               r.s_p, r.s_t, r.heisenberg, r.mean_x, r.mean_p});
  }
  qsix::table::write_output(t, qsix::table::parse_format(o.format), o.out,
                            make_meta("entropy", o));
  return 0;
}

int cmd_divergence(CommonOptions& o) {
  ModelParams params;
  params.lambda = o.lambda;
  const qsix::WellGeometry g = qsix::potential::geometry(params);
  const auto xgrid = qsix::quadrature::uniform_grid(
      std::max(6.5, g.x_plus + 4.5), 1.0 / 512.0);

  ResultTable t;
  if (o.mode == "pairs") {
    const qsix::SpectrumResult s =
        qsix::variational::solve(params, o.k_even, o.k_odd);
    std::array<qsix::WaveSample, 4> rho;
    for (int n = 0; n < 4; ++n)
      rho[n] = qsix::variational::evaluate_wavefunction(s.states[n], xgrid);
    t.columns = {"lambda", "pair", "kl_high_low", "crj", "energy_gap"};
    for (int base : {0, 2}) {
      const auto kl =
          qsix::infotheory::kl_divergence(rho[base + 1], rho[base]);
      const double crj =
          qsix::infotheory::crj_divergence(rho[base], rho[base + 1]);
      t.add_row({o.lambda,
                 std::string(std::to_string(base) + "-" +
                             std::to_string(base + 1)),
                 kl.kl, crj,
                 s.states[base + 1].energy - s.states[base].energy});
    }
  } else if (o.mode == "ho") {
    const qsix::SpectrumResult s =
        qsix::variational::solve(params, o.k_even, o.k_odd);
    const double omega = o.ho_omega > 0.0
                             ? o.ho_omega
                             : qsix::infotheory::default_ho_omega(o.lambda);
    t.columns = {"lambda", "n", "omega", "crj_vs_ho"};
    for (int n = 0; n <= 2; ++n) {
      const qsix::WaveSample rho =
          qsix::variational::evaluate_wavefunction(s.states[n], xgrid);
      const qsix::WaveSample ho =
          qsix::infotheory::ho_reference_density(n, omega, xgrid);
      t.add_row({o.lambda, static_cast<std::int64_t>(n), omega,
                 qsix::infotheory::crj_divergence(rho, ho)});
    }
  } else if (o.mode == "exact-trial") {
    if (!qsix::qes_exact::on_lattice(o.lambda))
      throw UsageError("divergence --mode exact-trial: lambda must be a "
                       "non-negative integer or half-integer");
    const qsix::AlgebraicSector sec = qsix::qes_exact::build_sector(o.lambda);
    const qsix::SpectrumResult s =
        qsix::variational::solve(params, o.k_even, o.k_odd);
    t.columns = {"lambda", "sector_index", "n", "crj_exact_trial",
                 "energy_delta"};
    for (int i = 0; i <= sec.n_max; ++i) {
      const int global_n = 2 * i; // sector states sit at n = 0, 2, 4, ...
      if (global_n >= static_cast<int>(s.states.size()))
        break;
      const qsix::WaveSample exact =
          qsix::qes_exact::exact_density(sec, i, xgrid);
      const qsix::WaveSample trial =
          qsix::variational::evaluate_wavefunction(s.states[global_n], xgrid);
      t.add_row({o.lambda, static_cast<std::int64_t>(i),
                 static_cast<std::int64_t>(global_n),
                 qsix::infotheory::crj_divergence(exact, trial),
                 sec.eigenvalues[i] - s.states[global_n].energy});
    }
  } else {
    throw UsageError("divergence: unknown mode '" + o.mode +
                     "' (pairs|ho|exact-trial)");
  }
  qsix::table::write_output(t, qsix::table::parse_format(o.format), o.out,
                            make_meta("divergence", o));
  return 0;
}

int cmd_wkb(CommonOptions& o) {
  const auto states = parse_states(o.states);
  ResultTable t;
  if (o.lambda < 0.0) {
    ModelParams params;
    params.lambda = o.lambda;
    const qsix::MeshConfig cfg =
        qsix::MeshConfig::defaults_for(params, o.mesh_size);
    const int count = *std::max_element(states.begin(), states.end()) + 1;
    const qsix::MeshResult m =
        qsix::lagrange_mesh::mesh_solve(params, cfg, count);
    t.columns = {"lambda", "n", "harmonic_estimate", "mesh_energy",
                 "relative_error"};
    for (int n : states) {
      const double est = qsix::wkb::harmonic_limit(n, o.lambda);
      t.add_row({o.lambda, static_cast<std::int64_t>(n), est, m.energies[n],
                 est / m.energies[n] - 1.0});
    }
  } else {
    const qsix::ActionOrder order = [&] {
      if (o.wkb_order == "full")
        return qsix::ActionOrder::FullPotential;
      if (o.wkb_order == "leading")
        return qsix::ActionOrder::LeadingOrder;
      throw UsageError("wkb: unknown --wkb-order '" + o.wkb_order +
                       "' (full|leading)");
    }();
    t.columns = {"lambda", "n",      "epsilon",  "energy", "y1", "y2",
                 "action", "splitting_estimate", "status"};
    for (int n : states) {
      try {
        const qsix::WkbResult r = qsix::wkb::quantize(n, o.lambda, order);
        t.add_row({o.lambda, static_cast<std::int64_t>(n), r.epsilon,
                   r.energy, r.y1, r.y2, r.action, r.splitting_estimate,
                   std::string("ok")});
      } catch (const qsix::NumericsError& e) {
        t.add_row({o.lambda, static_cast<std::int64_t>(n), Cell{}, Cell{},
                   Cell{}, Cell{}, Cell{}, Cell{},
                   std::string("not trapped")});
      }
    }
  }
  qsix::table::write_output(t, qsix::table::parse_format(o.format), o.out,
                            make_meta("wkb", o));
  return 0;
}

int cmd_qes_check(CommonOptions& o) {
  if (!qsix::qes_exact::on_lattice(o.lambda))
    throw UsageError("qes-check: lambda must be a non-negative integer or "
                     "half-integer");
  const qsix::AlgebraicSector sec = qsix::qes_exact::build_sector(o.lambda);
  const qsix::AlgebraicSector ref =
      qsix::qes_exact::reflection_partner(o.lambda);
  ModelParams params;
  params.lambda = o.lambda;
  const qsix::SpectrumResult s =
      qsix::variational::solve(params, o.k_even, o.k_odd);

  ResultTable t;
  t.columns = {"lambda",       "sector_index",       "n",
               "exact_energy", "variational_energy", "delta",
               "reflection_pair_sum"};
  const int offset = sec.parity == Parity::Even ? 0 : 1;
  for (int i = 0; i <= sec.n_max; ++i) {
    const int global_n = offset + 2 * i;
    Cell var_e, delta;
    if (global_n < static_cast<int>(s.states.size())) {
      var_e = s.states[global_n].energy;
      delta = s.states[global_n].energy - sec.eigenvalues[i];
    }
    t.add_row({o.lambda, static_cast<std::int64_t>(i),
               static_cast<std::int64_t>(global_n), sec.eigenvalues[i], var_e,
               delta,
               sec.eigenvalues[i] + ref.eigenvalues[sec.n_max - i]});
  }
  qsix::table::write_output(t, qsix::table::parse_format(o.format), o.out,
                            make_meta("qes-check", o));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"sextic double-well spectra and information diagnostics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qsix::version_string);

  CommonOptions o;

  CLI::App* solve = app.add_subcommand("solve", "energies and coefficients");
  add_common(solve, o);
  CLI::App* scan = app.add_subcommand("scan", "lambda-grid sweep");
  add_common(scan, o, /*with_lambda=*/false);
  scan->add_option("--quantities", o.quantities,
                   "comma list: energy,dx,dp,sx,sp,st,heisenberg,kl_pairs,"
                   "crj_pairs,crj_ho")
      ->capture_default_str();
  scan->add_option("--solver", o.solver, "variational|mesh")
      ->capture_default_str();
  CLI::App* critical =
      app.add_subcommand("critical", "zero crossing of E_n(lambda)");
  add_common(critical, o, /*with_lambda=*/false);
  critical->add_option("--n", o.n_state, "state index");
  critical->add_option("--bracket", o.bracket, "lo,hi with a sign change");
  CLI::App* entropy =
      app.add_subcommand("entropy", "uncertainty and entropy report");
  add_common(entropy, o);
  CLI::App* divergence =
      app.add_subcommand("divergence", "KL and CRJ divergences");
  add_common(divergence, o);
  divergence->add_option("--mode", o.mode, "pairs|ho|exact-trial")
      ->capture_default_str();
  CLI::App* wkbcmd =
      app.add_subcommand("wkb", "semiclassical quantization / limits");
  add_common(wkbcmd, o);
  wkbcmd->add_option("--wkb-order", o.wkb_order, "full|leading")
      ->capture_default_str();
  CLI::App* qes = app.add_subcommand("qes-check",
                                     "algebraic sector cross-validation");
  add_common(qes, o);
  CLI::App* selftest =
      app.add_subcommand("selftest", "run the module invariant suites");
  (void)selftest;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0)
      return app.exit(e); // --help / --version
    std::cerr << "usage error: " << e.what() << "\n\n"
              << app.help() << std::flush;
    return 1;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    merge_config(sub, o);
    const std::string name = sub->get_name();
    const bool has_lambda = name != "scan" && name != "critical";
    if (has_lambda && name != "selftest")
      echo_common(o, true);
    else if (name != "selftest")
      echo_common(o, false);
    if (name == "scan") {
      o.echo.emplace_back("quantities", o.quantities);
      o.echo.emplace_back("solver", o.solver);
    } else if (name == "critical") {
      o.echo.emplace_back("n", std::to_string(o.n_state));
      if (!o.bracket.empty())
        o.echo.emplace_back("bracket", o.bracket);
    } else if (name == "divergence") {
      o.echo.emplace_back("mode", o.mode);
    } else if (name == "wkb") {
      o.echo.emplace_back("wkb_order", o.wkb_order);
    }

    if (name == "solve")
      return cmd_solve(o);
    if (name == "scan")
      return cmd_scan(o);
    if (name == "critical")
      return cmd_critical(o);
    if (name == "entropy")
      return cmd_entropy(o);
    if (name == "divergence")
      return cmd_divergence(o);
    if (name == "wkb")
      return cmd_wkb(o);
    if (name == "qes-check")
      return cmd_qes_check(o);
    if (name == "selftest")
      return qsix::selftest::run_all(std::cout) == 0 ? 0 : 2;
    throw UsageError("unknown subcommand");
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const qsix::NumericsError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
