#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qsix/params.hpp"
#include "qsix/wave.hpp"

namespace qsix {

enum class Parity { Even, Odd };

inline const char* to_string(Parity p) {
  return p == Parity::Even ? "even" : "odd";
}

/// One solved bound state in the monomial-times-exp(-x^4/4) basis.
/// `coefficients` are normalized so the lowest-degree coefficient is 1 and
/// the amplitude is positive as x -> 0+; multiplying by `norm_constant`
/// gives the unit-norm wavefunction.
struct EigenState {
  int n = 0; ///< global quantum number, energy-ordered across parities
  Parity parity = Parity::Even;
  double energy = 0.0;
  std::vector<double> coefficients;
  double norm_constant = 1.0;
};

/// Full low-lying spectrum of one family member.
struct SpectrumResult {
  ModelParams params;
  std::vector<EigenState> states; ///< energy-ascending
  int k_even = 0;
  int k_odd = 0;
  std::vector<std::string> warnings; ///< e.g. conditioning fallbacks
};

namespace variational {

/// Monomial exponents of the sector basis: even {0,2,...,2k}, odd
/// {1,3,...,2k+1}; k+1 functions either way.
std::vector<int> basis_exponents(Parity parity, int k);

/// Hamiltonian and overlap matrices of the sector basis, assembled from
/// closed-form quartic-weight moments via
///   H (x^m w) = [-m(m-1)/2 x^{m-2} + (m + 1/2 - 2 lambda) x^{m+2} + x^{m+4}] w,
/// w = exp(-x^4/4).  Throws ConditioningError when the unit-diagonal
/// overlap has condition estimate above 1e12.
struct MatrixPair {
  Eigen::MatrixXd hamiltonian;
  Eigen::MatrixXd overlap;
};
MatrixPair hamiltonian_and_overlap(const ModelParams& params, Parity parity,
                                   int k);

/// Rayleigh-Ritz solve of both parity sectors, merged by energy.  The
/// generalized problem is reduced in extended precision behind a
/// condition-number guard; if a requested k trips the guard the sector
/// falls back to the largest admissible k and a warning is recorded.
SpectrumResult solve(const ModelParams& params, int k_even = 10,
                     int k_odd = 10);

/// <psi|H|psi>/<psi|psi> for an arbitrary coefficient vector in the sector
/// basis (lowest-degree coefficient included).  Throws on the zero vector.
double rayleigh_quotient(const ModelParams& params, Parity parity,
                         std::span<const double> coefficients);

/// Normalized amplitude at one point.
double wavefunction_value(const EigenState& state, double x);

/// Amplitudes and densities on a grid; the density integrates to 1 on the
/// module's default rule.
WaveSample evaluate_wavefunction(const EigenState& state,
                                 std::span<const double> xgrid);

} // namespace variational
} // namespace qsix
