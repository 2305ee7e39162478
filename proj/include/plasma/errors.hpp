#pragma once

#include <stdexcept>
#include <string>

namespace plasma {

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureNotConverged : NumericError {
  using NumericError::NumericError;
};

struct SeriesNotConverged : NumericError {
  using NumericError::NumericError;
};

// Result not representable in double precision.
struct OverflowError : NumericError {
  using NumericError::NumericError;
};

struct DivisionNearZero : NumericError {
  using NumericError::NumericError;
};

struct ZeroIntensity : NumericError {
  using NumericError::NumericError;
};

// Argument outside the domain of an operation. Not a convergence failure.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonHermitianInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BudgetExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace plasma
