#pragma once
// Independent reference computations for the unit tests. Nothing here calls
// into the library.

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using ld = long double;
using cld = std::complex<long double>;
inline constexpr ld kPiL = 3.141592653589793238462643383279502884L;

// tanh-sinh on [a, b]; endpoints are never evaluated.
template <class F>
auto tanh_sinh(F f, ld a, ld b, int level = 7) -> decltype(f(a)) {
  using R = decltype(f(a));
  const ld c = (a + b) / 2, d = (b - a) / 2, h = std::ldexp(1.0L, -level);
  R sum = f(c) * (kPiL / 2);
  for (int k = 1; k * h <= 4.5L; ++k) {
    const ld t = k * h, u = kPiL / 2 * std::sinh(t);
    const ld delta = 2 / (std::exp(2 * u) + 1);  // 1 - tanh(u)
    const ld ch = std::cosh(u);
    const ld w = kPiL / 2 * std::cosh(t) / (ch * ch);
    if (delta * d == 0) break;
    sum += (f(b - d * delta) + f(a + d * delta)) * w;
  }
  return sum * (d * h);
}

// exp-sinh on [a, inf) for integrands with fast decay.
template <class F>
auto exp_sinh(F f, ld a, int level = 7) -> decltype(f(a)) {
  using R = decltype(f(a));
  const ld h = std::ldexp(1.0L, -level);
  R sum{};
  for (int k = -int(5 / h); k * h <= 3.5L; ++k) {
    const ld t = k * h, e = std::exp(kPiL / 2 * std::sinh(t));
    sum += f(a + e) * (kPiL / 2 * std::cosh(t) * e);
  }
  return sum * h;
}

// composite Gauss-Legendre(20) with `panels` equal panels; nodes by Newton
template <class F>
auto gauss_panels(F f, ld a, ld b, int panels) -> decltype(f(a)) {
  using R = decltype(f(a));
  static std::vector<ld> x, w;
  if (x.empty()) {
    const int n = 20;
    for (int i = 1; i <= n; ++i) {
      ld z = std::cos(kPiL * (i - 0.25L) / (n + 0.5L)), dp = 1;
      for (int it = 0; it < 100; ++it) {
        ld p0 = 1, p1 = z;
        for (int k = 2; k <= n; ++k) {
          const ld p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (z * p1 - p0) / (z * z - 1);
        const ld step = p1 / dp;
        z -= step;
        if (std::fabs(step) < 1e-19L) break;
      }
      x.push_back(z);
      w.push_back(2 / ((1 - z * z) * dp * dp));
    }
  }
  R sum{};
  const ld width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const ld c = a + (p + 0.5L) * width, r = width / 2;
    for (std::size_t i = 0; i < x.size(); ++i) sum += f(c + r * x[i]) * (w[i] * r);
  }
  return sum;
}

// P(Poisson(mu) <= k) by forward summation of the probability masses
inline ld poisson_cdf(ld mu, long k) {
  ld term = std::exp(-mu), sum = term;
  for (long j = 1; j <= k; ++j) {
    term *= mu / j;
    sum += term;
  }
  return sum;
}

// n-th derivative at x of an entire function by the Cauchy integral formula
template <class F>
cld cauchy_derivative(F f, cld x, int n, ld radius = 1, int nodes = 128) {
  cld sum = 0;
  for (int m = 0; m < nodes; ++m) {
    const ld th = 2 * kPiL * m / nodes;
    sum += f(x + std::polar(radius, th)) * std::polar(1.0L, -n * th);
  }
  ld fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  return sum * fact / (ld(nodes) * std::pow(radius, ld(n)));
}

// h_n(z) = (-1)^n e^{z^2/2} d^n/dz^n e^{-z^2/2}
inline cld rodrigues_hermite(int n, cld z) {
  auto g = [](cld u) { return std::exp(-u * u / 2.0L); };
  return (n % 2 ? -1.0L : 1.0L) * std::exp(z * z / 2.0L) * cauchy_derivative(g, z, n);
}

// erfc(z) for Re z >= 0 as (2 / sqrt pi) int_0^inf e^{-(z+s)^2} ds
inline cld erfc_integral(cld z) {
  auto f = [&](ld s) { return std::exp(-(z + s) * (z + s)); };
  return gauss_panels(f, 0, 14, 700) * (2 / std::sqrt(kPiL));
}

inline ld plasma_F(ld x) { return std::erfc(x / std::sqrt(2.0L)) / 2; }
inline cld gauss(cld z) { return std::exp(-z * z / 2.0L) / std::sqrt(2 * kPiL); }

}  // namespace oracle
