#include "qsix/qes_exact.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qsix/errors.hpp"
#include "qsix/quadrature.hpp"

namespace qsix::qes_exact {
namespace {

// Substituting psi = P exp(-x^4/4 -+ x^2/2) reduces H psi = E psi to
//   h P = -P''/2 + (x^3 +- x) P' + (+-1/2 - 2 lambda x^2) P = E P
// (upper signs: this model; lower signs: the quartic-reflected companion).
// On the parity ladder x^{p+2j} the operator closes at lambda = N
// (p = 0) or (2N+1)/2 (p = 1):
//   h x^{m} = -m(m-1)/2 x^{m-2} + (+-)(m + 1/2)(...) x^{m} + (m - 2 lambda) x^{m+2}.
AlgebraicSector make_sector(double lambda, bool reflected) {
  const double two_lambda = 2.0 * lambda;
  const double rounded = std::round(two_lambda);
  if (lambda < 0.0 || std::abs(two_lambda - rounded) > 1e-12)
    throw std::invalid_argument(
        "build_sector: lambda must be a non-negative integer or "
        "half-integer");
  const long twol = static_cast<long>(rounded);

  AlgebraicSector sec;
  sec.lambda = lambda;
  sec.parity = (twol % 2 == 0) ? Parity::Even : Parity::Odd;
  sec.n_max = static_cast<int>(twol % 2 == 0 ? twol / 2 : (twol - 1) / 2);
  const int dim = sec.n_max + 1;
  const int p = sec.parity == Parity::Even ? 0 : 1;

  sec.matrix = Eigen::MatrixXd::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) {
    const int m = p + 2 * j;
    const double diag = m + 0.5;
    sec.matrix(j, j) = reflected ? -diag : diag;
    if (j >= 1)
      sec.matrix(j - 1, j) = -0.5 * m * (m - 1);
    if (j + 1 < dim)
      sec.matrix(j + 1, j) = m - 2.0 * lambda; // vanishes at j = n_max
  }

  Eigen::EigenSolver<Eigen::MatrixXd> es(sec.matrix);
  if (es.info() != Eigen::Success)
    throw NumericsError("build_sector: eigensolve failed");
  const auto vals = es.eigenvalues();
  const auto vecs = es.eigenvectors();
  for (int i = 0; i < dim; ++i)
    if (std::abs(vals(i).imag()) > 1e-10)
      throw NumericsError("build_sector: non-real sector eigenvalue");

  std::vector<int> order(dim);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return vals(a).real() < vals(b).real();
  });
  for (int i : order) {
    sec.eigenvalues.push_back(vals(i).real());
    std::vector<double> poly(dim);
    for (int j = 0; j < dim; ++j)
      poly[j] = vecs(j, i).real();
    // lowest-degree coefficient positive (it is nonzero for a tridiagonal
    // irreducible sector matrix)
    if (poly[0] < 0.0)
      for (double& c : poly)
        c = -c;
    sec.polynomials.push_back(std::move(poly));
  }
  return sec;
}

} // namespace

bool on_lattice(double lambda) {
  return lambda >= 0.0 &&
         std::abs(2.0 * lambda - std::round(2.0 * lambda)) <= 1e-12;
}

AlgebraicSector build_sector(double lambda) { return make_sector(lambda, false); }

AlgebraicSector reflection_partner(double lambda) {
  return make_sector(lambda, true);
}

double amplitude(const AlgebraicSector& sector, int which, double x) {
  if (which < 0 || which > sector.n_max)
    throw std::invalid_argument("qes_exact: state index out of range");
  const auto& poly = sector.polynomials[which];
  const double x2 = x * x;
  double pval = 0.0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it)
    pval = pval * x2 + *it;
  if (sector.parity == Parity::Odd)
    pval *= x;
  return pval * std::exp(-x2 * x2 / 4.0 - x2 / 2.0);
}

WaveSample exact_density(const AlgebraicSector& sector, int which,
                         std::span<const double> xgrid) {
  if (which < 0 || which > sector.n_max)
    throw std::invalid_argument("qes_exact: state index out of range");
  const QuadratureRule rule = quadrature::default_rule();
  const double norm2 = rule.integrate([&](double x) {
    const double a = amplitude(sector, which, x);
    return a * a;
  });
  const double scale = 1.0 / std::sqrt(norm2);

  WaveSample w;
  w.grid.assign(xgrid.begin(), xgrid.end());
  w.amplitude.resize(xgrid.size());
  w.density.resize(xgrid.size());
  for (std::size_t i = 0; i < xgrid.size(); ++i) {
    const double a = scale * amplitude(sector, which, xgrid[i]);
    w.amplitude[i] = a;
    w.density[i] = a * a;
  }
  return w;
}

} // namespace qsix::qes_exact
