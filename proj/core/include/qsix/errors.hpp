#pragma once

#include <stdexcept>
#include <string>

namespace qsix {

/// A computation failed for numerical reasons (non-convergence, guard
/// violation, out-of-band input).  CLI maps this family to exit code 2.
class NumericsError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An overlap matrix (or similar) is too ill-conditioned to trust.
class ConditioningError : public NumericsError {
public:
  using NumericsError::NumericsError;
};

/// The alternating-series evaluation would lose too many digits; callers
/// should fall back to quadrature.
class CancellationError : public NumericsError {
public:
  CancellationError(const std::string& what, double ratio)
      : NumericsError(what), cancellation_ratio(ratio) {}
  double cancellation_ratio;
};

/// Bad command line / config input.  CLI maps this to exit code 1.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace qsix
