#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qsix/variational.hpp"
#include "qsix/wave.hpp"

namespace qsix {

/// Finite algebraic sector at lambda = N (even states) or (2N+1)/2 (odd
/// states): the reduced operator
///   h P = -P''/2 + (x^3 + x) P' + (1/2 - 2 lambda x^2) P
/// restricted to polynomials of matching parity, whose eigenvalues are
/// exact energies of the full problem.
struct AlgebraicSector {
  double lambda = 0.0;
  int n_max = 0; ///< dimension = n_max + 1
  Parity parity = Parity::Even;
  Eigen::MatrixXd matrix;
  std::vector<double> eigenvalues; ///< ascending, all real
  /// Polynomial prefactors, one per eigenvalue, as coefficients of
  /// x^{2i} (even) or x^{2i+1} (odd), lowest-degree coefficient first.
  std::vector<std::vector<double>> polynomials;
};

namespace qes_exact {

/// True iff 2*lambda is a non-negative integer (the admissible lattice).
bool on_lattice(double lambda);

/// Builds and diagonalizes the sector.  Throws std::invalid_argument off
/// the lattice and NumericsError if eigenvalues come out non-real.
AlgebraicSector build_sector(double lambda);

/// Sector of the companion potential with the quartic term negated
/// ((x^6 - 2x^4 - 2(2 lambda + 1) x^2)/2, bound ansatz exp(-x^4/4 + x^2/2)).
/// Its spectrum is exactly the negated mirror of build_sector's: sorted
/// ascending, e_i(sector) + e_{n_max-i}(partner) = 0.
AlgebraicSector reflection_partner(double lambda);

/// Normalized density |P(x)|^2 exp(-x^4/2 - x^2) of sector state `which`
/// (0 = lowest) on the grid.
WaveSample exact_density(const AlgebraicSector& sector, int which,
                         std::span<const double> xgrid);

/// Unnormalized amplitude P(x) exp(-x^4/4 - x^2/2).
double amplitude(const AlgebraicSector& sector, int which, double x);

} // namespace qes_exact
} // namespace qsix
