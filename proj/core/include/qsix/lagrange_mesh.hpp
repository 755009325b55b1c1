#pragma once

#include <array>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qsix/params.hpp"
#include "qsix/variational.hpp"

namespace qsix {

/// Hermite-mesh configuration: mesh size and the coordinate scaling
/// x = scale * u.  scale <= 0 selects the automatic rule.
struct MeshConfig {
  int size = 80;
  double scale = 0.0;

  /// Automatic scale: 1/(1.5 + |lambda|^{1/4}), enlarged for lambda > 0 so
  /// the scaled mesh reaches past the outer minima
  /// (max with (x_plus + 2.5)/sqrt(2 size)); size is raised to 240 beyond
  /// lambda = 10 where the wells move outward.
  static MeshConfig defaults_for(const ModelParams& params, int size = 80);
};

/// Solved mesh spectrum.  Eigenvectors are orthonormal mesh coefficient
/// columns; amplitude() interpolates through the Lagrange basis.
struct MeshResult {
  ModelParams params;
  MeshConfig config;
  std::vector<double> energies; ///< ascending
  std::vector<Parity> parities;
  std::vector<double> nodes; ///< scaled mesh points, ascending
  Eigen::MatrixXd vectors;   ///< one column per returned state

  /// Lagrange-interpolated wavefunction of state `which` at x.
  double amplitude(int which, double x) const;

  /// Wavefunction value of state `which` at mesh node i.
  double value_at_node(int which, int i) const;

  // interpolation data filled by the solvers
  std::vector<double> node_inv_sqrt_weight; ///< 1/sqrt(regularized weight)
  std::vector<double> node_qprime;          ///< q_n'(u_i)
};

namespace lagrange_mesh {

/// Roots of the degree-n Hermite polynomial (ascending) and the associated
/// regularized Gauss weights lambda_i exp(u_i^2), via Newton iteration on
/// the bounded Hermite-function recurrence.
void hermite_rule(int n, std::vector<double>& nodes,
                  std::vector<double>& weights);

/// Dense symmetric solve on the Hermite mesh: closed-form kinetic matrix
/// plus diagonal potential.  count <= size/4.
MeshResult mesh_solve(const ModelParams& params, const MeshConfig& config,
                      int count);

/// Same mesh with the potential overridden by x^2/2; exact to truncation
/// on the Hermite mesh, used as the method's sanity gate.
MeshResult harmonic_reference(int size, double scale, int count);

/// Energies E_0..E_3 per mesh size, for convergence certification.
struct ConvergenceRow {
  int size;
  std::array<double, 4> energies;
};
std::vector<ConvergenceRow> convergence_scan(const ModelParams& params,
                                             std::span<const int> sizes);

} // namespace lagrange_mesh
} // namespace qsix
