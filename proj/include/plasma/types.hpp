#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace plasma {

using Cpx = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kSqrtPi = 1.772453850905516027298167483341145182;
inline constexpr double kSqrt2 = 1.414213562373095048801688724209698079;
inline constexpr double kSqrt2Pi = 2.506628274631000502415765284811045253;
inline constexpr double kLn2 = 0.693147180559945309417232121458176568;

// Real interval with possibly infinite endpoints. Open or closed does not
// matter for the integrals it is used in.
struct IntervalR {
  double lo = -kInf;
  double hi = kInf;

  bool valid() const { return lo < hi; }
};

inline bool finite(Cpx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace plasma
