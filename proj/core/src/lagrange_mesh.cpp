#include "qsix/lagrange_mesh.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include <Eigen/Dense>

#include "qsix/errors.hpp"
#include "qsix/potential.hpp"

namespace qsix {
namespace {

constexpr double kPiQuarter = 0.7511255444649425; // pi^{-1/4}

// Hermite *functions* q_k = p_k exp(-u^2/2) with p_k orthonormal under
// exp(-u^2).  They satisfy the same three-term recurrence as p_k and stay
// bounded at any order, so no overflow guard is needed.
void hermite_function_ladder(int n, double u, double& qn, double& qn_deriv,
                             double& christoffel) {
  double q0 = kPiQuarter * std::exp(-0.5 * u * u);
  double q1 = std::sqrt(2.0) * u * q0;
  christoffel = q0 * q0;
  double prev = q0, cur = q1;
  for (int j = 1; j < n; ++j) {
    christoffel += cur * cur;
    const double next =
        u * std::sqrt(2.0 / (j + 1.0)) * cur - std::sqrt(j / (j + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  qn = cur;
  // p_n' = sqrt(2n) p_{n-1}  =>  q_n' = sqrt(2n) q_{n-1} - u q_n
  qn_deriv = std::sqrt(2.0 * n) * prev - u * cur;
}

MeshResult solve_on_mesh(const ModelParams& params, MeshConfig cfg, int count,
                         const std::function<double(double)>& pot,
                         bool classify_parity) {
  if (cfg.size < 4)
    throw std::invalid_argument("mesh_solve: size must be >= 4");
  if (count < 1 || count > cfg.size / 4)
    throw std::invalid_argument(
        "mesh_solve: count must satisfy 1 <= count <= size/4");

  const int n = cfg.size;
  const double h = cfg.scale;
  if (!(h > 0.0))
    throw std::invalid_argument("mesh_solve: scale must be > 0");

  std::vector<double> u, regw;
  lagrange_mesh::hermite_rule(n, u, regw);

  Eigen::MatrixXd H(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double g;
      if (i == j) {
        g = (2.0 * n + 1.0 - u[i] * u[i]) / 3.0;
      } else {
        const double d = u[i] - u[j];
        g = ((i - j) % 2 == 0 ? 2.0 : -2.0) / (d * d);
      }
      H(i, j) = g / (2.0 * h * h);
    }
    H(i, i) += pot(h * u[i]);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  if (es.info() != Eigen::Success)
    throw NumericsError("mesh_solve: eigensolve failed");

  MeshResult out;
  out.params = params;
  out.config = cfg;
  out.nodes.resize(n);
  out.node_inv_sqrt_weight.resize(n);
  out.node_qprime.resize(n);
  for (int i = 0; i < n; ++i) {
    out.nodes[i] = h * u[i];
    double q, dq, chr;
    hermite_function_ladder(n, u[i], q, dq, chr);
    out.node_inv_sqrt_weight[i] = std::sqrt(chr); // = 1/sqrt(regw[i])
    out.node_qprime[i] = dq;
  }
  out.energies.assign(es.eigenvalues().data(), es.eigenvalues().data() + count);
  out.vectors = es.eigenvectors().leftCols(count);
  for (int s = 0; s < count; ++s) {
    double sym = 0.0;
    for (int i = 0; i < n; ++i)
      sym += out.vectors(i, s) * out.vectors(n - 1 - i, s);
    const Parity parity = sym >= 0.0 ? Parity::Even : Parity::Odd;
    out.parities.push_back(classify_parity ? parity
                                           : (s % 2 == 0 ? Parity::Even
                                                         : Parity::Odd));
    // sign convention: positive amplitude just right of the origin
    double probe = 0.0;
    for (int i = n / 2; i < n; ++i)
      if (std::abs(out.vectors(i, s)) > 1e-8) {
        probe = out.vectors(i, s);
        break;
      }
    if (probe < 0.0)
      out.vectors.col(s) *= -1.0;
  }
  return out;
}

} // namespace

namespace lagrange_mesh {

void hermite_rule(int n, std::vector<double>& nodes,
                  std::vector<double>& weights) {
  if (n < 1)
    throw std::invalid_argument("hermite_rule: n must be >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  double z = 0.0, z_prev1 = 0.0, z_prev2 = 0.0;
  for (int i = 0; i < m; ++i) {
    // Tricomi-style cascade of initial guesses, largest root first.
    if (i == 0)
      z = std::sqrt(2.0 * n + 1.0) -
          1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    else if (i == 1)
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * z_prev2;
    else if (i == 3)
      z = 1.91 * z - 0.91 * z_prev2;
    else
      z = 2.0 * z - z_prev2;

    double qn = 0.0, dq = 0.0, chr = 0.0;
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
      hermite_function_ladder(n, z, qn, dq, chr);
      const double dz = qn / dq;
      z -= dz;
      if (std::abs(dz) < 1e-14) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw NumericsError("hermite_rule: Newton iteration did not converge");
    hermite_function_ladder(n, z, qn, dq, chr);
    z_prev2 = z_prev1;
    z_prev1 = z;
    nodes[n - 1 - i] = z;
    nodes[i] = -z;
    weights[n - 1 - i] = weights[i] = 1.0 / chr;
  }
  if (n % 2 == 1)
    nodes[n / 2] = 0.0;
}

} // namespace lagrange_mesh

MeshConfig MeshConfig::defaults_for(const ModelParams& params, int size) {
  MeshConfig cfg;
  cfg.size = size;
  if (params.lambda > 10.0)
    cfg.size = std::max(size, 240);
  double h = 1.0 / (1.5 + std::pow(std::abs(params.lambda), 0.25));
  if (params.lambda > 0.0) {
    const WellGeometry g = potential::geometry(params);
    h = std::max(h, (g.x_plus + 2.5) / std::sqrt(2.0 * cfg.size));
  }
  cfg.scale = h;
  return cfg;
}

MeshResult lagrange_mesh::mesh_solve(const ModelParams& params,
                                     const MeshConfig& config, int count) {
  params.validate();
  MeshConfig cfg = config;
  if (cfg.scale <= 0.0)
    cfg.scale = MeshConfig::defaults_for(params, cfg.size).scale;
  return solve_on_mesh(
      params, cfg, count,
      [&](double x) { return potential::evaluate(params, x); }, true);
}

MeshResult lagrange_mesh::harmonic_reference(int size, double scale,
                                             int count) {
  ModelParams params;
  return solve_on_mesh(
      params, MeshConfig{size, scale}, count,
      [](double x) { return 0.5 * x * x; }, false);
}

double MeshResult::value_at_node(int which, int i) const {
  return vectors(i, which) * node_inv_sqrt_weight[i] / std::sqrt(config.scale);
}

double MeshResult::amplitude(int which, double x) const {
  if (which < 0 || which >= static_cast<int>(energies.size()))
    throw std::invalid_argument("MeshResult::amplitude: state out of range");
  const int n = static_cast<int>(nodes.size());
  const double h = config.scale;
  const double u = x / h;

  double qn, dq, chr;
  hermite_function_ladder(n, u, qn, dq, chr);

  // psi(x) = sum_i c_i f_i(x/h)/sqrt(h),
  // f_i(u) = w_i^{-1/2} q_n(u) / (q_n'(u_i)(u - u_i)), regularized weight w_i.
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double du = u - nodes[i] / h;
    if (std::abs(du) < 1e-10)
      return value_at_node(which, i);
    acc += vectors(i, which) * node_inv_sqrt_weight[i] * qn /
           (node_qprime[i] * du);
  }
  return acc / std::sqrt(h);
}

std::vector<lagrange_mesh::ConvergenceRow>
lagrange_mesh::convergence_scan(const ModelParams& params,
                                std::span<const int> sizes) {
  std::vector<ConvergenceRow> rows;
  for (int s : sizes) {
    const MeshConfig cfg = MeshConfig::defaults_for(params, s);
    const MeshResult r = mesh_solve(params, cfg, 4);
    rows.push_back(
        {s, {r.energies[0], r.energies[1], r.energies[2], r.energies[3]}});
  }
  return rows;
}

} // namespace qsix
