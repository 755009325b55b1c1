#include "qsix/variational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "qsix/errors.hpp"
#include "qsix/quadrature.hpp"

namespace qsix::variational {
namespace {

using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXld = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

constexpr double kConditionLimit = 1e12;

// integral x^q exp(-x^4/2) dx in extended precision (even q).
long double moment_ld(int q) {
  const long double a = (q + 1.0L) / 4.0L;
  return 0.5L * std::exp(lgammal(a) - a * std::log(0.5L));
}

// Raw sector matrices from the closed-form action of H on x^m exp(-x^4/4).
void assemble(const ModelParams& params, Parity parity, int k, MatrixXld& H,
              MatrixXld& S) {
  const auto ms = basis_exponents(parity, k);
  const int nb = static_cast<int>(ms.size());
  H.resize(nb, nb);
  S.resize(nb, nb);
  const long double lam = params.lambda;
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < nb; ++j) {
      const int mi = ms[i], mj = ms[j];
      S(i, j) = moment_ld(mi + mj);
      long double h = 0.0L;
      if (mj >= 2)
        h += -0.5L * mj * (mj - 1) * moment_ld(mi + mj - 2);
      h += (mj + 0.5L - 2.0L * lam) * moment_ld(mi + mj + 2);
      h += moment_ld(mi + mj + 4);
      H(i, j) = h;
    }
  }
  H = ((H + H.transpose()) / 2.0L).eval(); // symmetrize roundoff
}

// Unit-diagonal rescaling D^{-1} S D^{-1}; returns the scaling diag.
VectorXld normalize_diag(MatrixXld& H, MatrixXld& S) {
  const int nb = static_cast<int>(S.rows());
  VectorXld d(nb);
  for (int i = 0; i < nb; ++i)
    d(i) = std::sqrt(S(i, i));
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      S(i, j) /= d(i) * d(j);
      H(i, j) /= d(i) * d(j);
    }
  return d;
}

double overlap_condition(const MatrixXld& S_unit) {
  Eigen::SelfAdjointEigenSolver<MatrixXld> es(S_unit,
                                              Eigen::EigenvaluesOnly);
  const long double lo = es.eigenvalues().minCoeff();
  const long double hi = es.eigenvalues().maxCoeff();
  if (!(lo > 0.0L))
    return std::numeric_limits<double>::infinity();
  return static_cast<double>(hi / lo);
}

struct SectorSolution {
  std::vector<EigenState> states;
  int k_used = 0;
};

SectorSolution solve_sector(const ModelParams& params, Parity parity, int k) {
  MatrixXld H, S;
  assemble(params, parity, k, H, S);
  const VectorXld d = normalize_diag(H, S);
  const double cond = overlap_condition(S);
  if (cond > kConditionLimit)
    throw ConditioningError("variational: overlap condition " +
                            std::to_string(cond) + " exceeds 1e12 at k = " +
                            std::to_string(k));
  Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXld> ges(H, S);
  if (ges.info() != Eigen::Success)
    throw NumericsError("variational: generalized eigensolve failed");

  SectorSolution out;
  out.k_used = k;
  const int nb = static_cast<int>(H.rows());
  for (int s = 0; s < nb; ++s) {
    EigenState st;
    st.parity = parity;
    st.energy = static_cast<double>(ges.eigenvalues()(s));
    // Undo the diagonal rescaling, then pin the lowest-degree coefficient
    // to 1 (this fixes the amplitude positive as x -> 0+).
    VectorXld c = ges.eigenvectors().col(s).cwiseQuotient(d);
    c /= c(0);
    long double norm2 = 0.0L;
    const auto ms = basis_exponents(parity, k);
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j)
        norm2 += c(i) * c(j) * moment_ld(ms[i] + ms[j]);
    st.norm_constant = static_cast<double>(1.0L / std::sqrt(norm2));
    st.coefficients.resize(nb);
    for (int i = 0; i < nb; ++i)
      st.coefficients[i] = static_cast<double>(c(i));
    out.states.push_back(std::move(st));
  }
  return out;
}

} // namespace

std::vector<int> basis_exponents(Parity parity, int k) {
  if (k < 0)
    throw std::invalid_argument("basis_exponents: negative k");
  std::vector<int> ms(k + 1);
  for (int i = 0; i <= k; ++i)
    ms[i] = parity == Parity::Even ? 2 * i : 2 * i + 1;
  return ms;
}

MatrixPair hamiltonian_and_overlap(const ModelParams& params, Parity parity,
                                   int k) {
  params.validate();
  if (k < 1)
    throw std::invalid_argument("hamiltonian_and_overlap: k must be >= 1");
  MatrixXld H, S;
  assemble(params, parity, k, H, S);
  MatrixPair out;
  out.hamiltonian = H.cast<double>();
  out.overlap = S.cast<double>();
  {
    MatrixXld Hc = H, Sc = S;
    normalize_diag(Hc, Sc);
    const double cond = overlap_condition(Sc);
    if (cond > kConditionLimit)
      throw ConditioningError("hamiltonian_and_overlap: overlap condition " +
                              std::to_string(cond) + " exceeds 1e12");
  }
  return out;
}

SpectrumResult solve(const ModelParams& params, int k_even, int k_odd) {
  params.validate();
  if (k_even < 4 || k_odd < 4)
    throw std::invalid_argument("variational::solve: basis sizes must be >= 4");

  SpectrumResult result;
  result.params = params;

  auto solve_with_fallback = [&](Parity parity, int k) -> SectorSolution {
    for (int kk = k; kk >= 4; --kk) {
      try {
        SectorSolution s = solve_sector(params, parity, kk);
        if (kk != k)
          result.warnings.push_back(
              std::string("conditioning fallback: ") + to_string(parity) +
              " sector reduced from k = " + std::to_string(k) + " to k = " +
              std::to_string(kk));
        return s;
      } catch (const ConditioningError&) {
        if (kk == 4)
          throw;
      }
    }
    throw ConditioningError("variational::solve: no admissible basis size");
  };

  SectorSolution even = solve_with_fallback(Parity::Even, k_even);
  SectorSolution odd = solve_with_fallback(Parity::Odd, k_odd);
  result.k_even = even.k_used;
  result.k_odd = odd.k_used;

  result.states.reserve(even.states.size() + odd.states.size());
  std::merge(even.states.begin(), even.states.end(), odd.states.begin(),
             odd.states.end(), std::back_inserter(result.states),
             [](const EigenState& a, const EigenState& b) {
               return a.energy < b.energy;
             });
  for (std::size_t i = 0; i < result.states.size(); ++i)
    result.states[i].n = static_cast<int>(i);
  return result;
}

double rayleigh_quotient(const ModelParams& params, Parity parity,
                         std::span<const double> coefficients) {
  params.validate();
  if (coefficients.empty())
    throw std::invalid_argument("rayleigh_quotient: empty coefficient vector");
  const int k = static_cast<int>(coefficients.size()) - 1;
  const auto ms = basis_exponents(parity, k);
  long double num = 0.0L, den = 0.0L;
  const long double lam = params.lambda;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
      const int mi = ms[i], mj = ms[j];
      const long double cc =
          static_cast<long double>(coefficients[i]) * coefficients[j];
      den += cc * moment_ld(mi + mj);
      long double h = 0.0L;
      if (mj >= 2)
        h += -0.5L * mj * (mj - 1) * moment_ld(mi + mj - 2);
      h += (mj + 0.5L - 2.0L * lam) * moment_ld(mi + mj + 2);
      h += moment_ld(mi + mj + 4);
      num += cc * h;
    }
  }
  if (den <= 0.0L)
    throw std::invalid_argument("rayleigh_quotient: zero-norm vector");
  return static_cast<double>(num / den);
}

double wavefunction_value(const EigenState& state, double x) {
  const double x2 = x * x;
  // Horner in x^2 over the sector ladder, highest degree first.
  double poly = 0.0;
  for (auto it = state.coefficients.rbegin(); it != state.coefficients.rend();
       ++it)
    poly = poly * x2 + *it;
  if (state.parity == Parity::Odd)
    poly *= x;
  return state.norm_constant * poly * std::exp(-x2 * x2 / 4.0);
}

WaveSample evaluate_wavefunction(const EigenState& state,
                                 std::span<const double> xgrid) {
  WaveSample w;
  w.grid.assign(xgrid.begin(), xgrid.end());
  w.amplitude.resize(xgrid.size());
  w.density.resize(xgrid.size());
  for (std::size_t i = 0; i < xgrid.size(); ++i) {
    const double a = wavefunction_value(state, xgrid[i]);
    w.amplitude[i] = a;
    w.density[i] = a * a;
  }
  return w;
}

} // namespace qsix::variational
