#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsix/lagrange_mesh.hpp"
#include "qsix/params.hpp"
#include "qsix/table.hpp"

namespace qsix {

enum class SolverKind { Variational, Mesh };

/// Which per-state / per-pair quantities a sweep emits.
enum class Quantity {
  Energy,
  DeltaX,
  DeltaP,
  Sx,
  Sp,
  St,
  Heisenberg,
  KlPairs,  ///< KL(rho_{n+1} || rho_n) on even-n rows
  CrjPairs, ///< CRJ(rho_n, rho_{n+1}) on even-n rows
  CrjHo,    ///< CRJ(rho_n, HO reference)
};

std::optional<Quantity> parse_quantity(const std::string& name);
const char* to_string(Quantity q);

/// A lambda-grid sweep specification.
struct ScanSpec {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double step = 0.25;
  std::vector<int> states{0, 1, 2, 3};
  std::vector<Quantity> quantities{Quantity::Energy};
  SolverKind solver = SolverKind::Variational;
  int k_even = 10;
  int k_odd = 10;
  int mesh_size = 80;
  double mesh_scale = 0.0;   ///< <= 0: automatic
  double ho_omega = 0.0;     ///< <= 0: default_ho_omega(lambda)
  double tol_quad = 1e-12;

  void validate() const; ///< throws UsageError
};

/// Root of E_n(lambda) = 0 located by the variational solver.
struct CriticalCoupling {
  int n = 0;
  double lambda_c = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual = 0.0; ///< |E_n(lambda_c)|
};

/// Tunneling-doublet diagnostics at one coupling.
struct PairingReport {
  double lambda = 0.0;
  double gap01 = 0.0;  ///< E_1 - E_0
  double gap23 = 0.0;  ///< E_3 - E_2
  double crj01 = 0.0;  ///< CRJ(rho_0, rho_1)
  double crj23 = 0.0;  ///< CRJ(rho_2, rho_3)
};

namespace scans {

/// Runs the sweep; one row per (lambda, n), lambda-major.  A solver
/// failure at a grid point yields a flagged row (status column) instead of
/// aborting the scan.  Deterministic for a fixed spec.
ResultTable run_scan(const ScanSpec& spec);

/// Brent root of lambda -> E_n(lambda) inside the bracket; requires a sign
/// change, |E_n(lambda_c)| < 1e-9 on success.
CriticalCoupling find_critical(int n, double lo, double hi, int k_even = 10,
                               int k_odd = 10);

/// Energy gaps and intra-pair CRJ divergences at one coupling.
PairingReport pairing_report(const ModelParams& params, int k_even = 10,
                             int k_odd = 10);

} // namespace scans
} // namespace qsix
