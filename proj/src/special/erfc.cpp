#include <cmath>
#include <string>

#include "plasma/errors.hpp"
#include "plasma/special.hpp"

namespace plasma {

namespace {

constexpr double kEnvelope = 30.0;

// Taylor series of erf. Used where the continued fraction is slow: inside
// |z| < 8 with Re z < 1.5.
Cpx erf_series(Cpx z) {
  const Cpx z2 = z * z;
  Cpx term = z;  // (-1)^k z^{2k+1} / k!
  Cpx sum = z;
  for (int k = 1; k < 600; ++k) {
    term *= -z2 / double(k);
    const Cpx add = term / double(2 * k + 1);
    sum += add;
    if (std::abs(add) <= 1e-17 * std::abs(sum)) break;
  }
  return sum * (2.0 / kSqrtPi);
}

// exp(z^2) erfc(z) for Re z >= 0 by the Laplace continued fraction
//   sqrt(pi) e^{z^2} erfc z = 1 / (z + (1/2) / (z + 1 / (z + (3/2) / (z + ...))))
// evaluated with the modified Lentz method.
Cpx erfcx_cf(Cpx z) {
  constexpr double tiny = 1e-300;
  Cpx f = z;
  if (std::abs(f) < tiny) f = tiny;
  Cpx C = f;
  Cpx D = 0.0;
  for (int k = 1; k < 20000; ++k) {
    const double a = 0.5 * k;
    D = z + a * D;
    if (std::abs(D) < tiny) D = tiny;
    D = 1.0 / D;
    C = z + a / C;
    if (std::abs(C) < tiny) C = tiny;
    const Cpx delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) return 1.0 / (kSqrtPi * f);
  }
  throw SeriesNotConverged("erfc continued fraction did not converge");
}

bool use_series(Cpx z) { return z.real() < 1.5 && std::abs(z) < 8.0; }

Cpx checked(Cpx v, const char* what) {
  if (!finite(v)) throw OverflowError(std::string(what) + ": value not representable");
  return v;
}

}  // namespace

Cpx erfcx_cpx(Cpx z) {
  if (z.real() < 0.0) {
    // erfcx(z) = 2 exp(z^2) - erfcx(-z)
    return checked(2.0 * std::exp(z * z) - erfcx_cpx(-z), "erfcx");
  }
  if (use_series(z)) return std::exp(z * z) * (1.0 - erf_series(z));
  return erfcx_cf(z);
}

Cpx erfc_cpx(Cpx z) {
  if (z.real() < 0.0) return checked(2.0 - erfc_cpx(-z), "erfc");
  if (use_series(z)) return 1.0 - erf_series(z);
  return checked(std::exp(-z * z) * erfcx_cf(z), "erfc");
}

ErfcResult erfc_checked(Cpx z) { return {erfc_cpx(z), std::abs(z) <= kEnvelope}; }

Cpx plasma_F(Cpx z) { return 0.5 * erfc_cpx(z / kSqrt2); }

double plasma_F(double x) { return 0.5 * std::erfc(x / kSqrt2); }

Cpx weighted_F(Cpx L, Cpx u) {
  // Re u >= 0:  F(u) = exp(-u^2/2) erfcx(u/sqrt2) / 2
  // Re u < 0:   F(u) = 1 - F(-u)
  const Cpx v = u / kSqrt2;
  if (u.real() >= 0.0) return 0.5 * std::exp(L - 0.5 * u * u) * erfcx_cpx(v);
  return std::exp(L) - 0.5 * std::exp(L - 0.5 * u * u) * erfcx_cpx(-v);
}

Cpx gauss_gamma(Cpx z) { return std::exp(-0.5 * z * z) / kSqrt2Pi; }

double gauss_gamma(double x) { return std::exp(-0.5 * x * x) / kSqrt2Pi; }

Cpx conv_indicator(Cpx z, const IntervalR& I) {
  // F(-inf) = 1, F(+inf) = 0
  const Cpx upper = std::isinf(I.hi) ? Cpx(I.hi > 0 ? 1.0 : 0.0) : plasma_F(z - I.hi);
  const Cpx lower = std::isinf(I.lo) ? Cpx(I.lo < 0 ? 0.0 : 1.0) : plasma_F(z - I.lo);
  return upper - lower;
}

double plasma_F_derivative(int n, double s) {
  if (n == 0) return plasma_F(s);
  // F^{(n)} = (-1)^n h_{n-1} gamma
  const double h = hermite_prob(n - 1, s);
  return (n % 2 == 0 ? 1.0 : -1.0) * h * gauss_gamma(s);
}

}  // namespace plasma
