#include <cmath>

#include "plasma/errors.hpp"
#include "plasma/quadrature.hpp"
#include "plasma/special.hpp"

namespace plasma {

Cpx hard_edge_H(Cpx z) {
  if (z.real() > 10.0) throw DomainError("hard_edge_H requires Re z <= 10");
  constexpr double T = 12.0;
  const double scale = std::exp(0.5 * z.imag() * z.imag());
  AdaptiveOptions opt;
  opt.abs_tol = 1e-14 * scale;
  opt.rel_tol = 1e-13;
  auto integrand = [z](double t) { return gauss_gamma(z - t) / plasma_F(t); };
  const Cpx body = integrate_adaptive(integrand, -T, 0.0, opt);
  // On (-inf, -T] the factor 1/F(t) = 1 + F(-t)/F(t) differs from 1 by less
  // than F(12)/F(-12) < 2e-33, so that piece is F(z + T) to working precision.
  const Cpx v = body + plasma_F(z + T);
  if (!finite(v)) throw OverflowError("hard_edge_H: value not representable");
  return v;
}

const HardEdgePlasma& HardEdgePlasma::instance() {
  static const HardEdgePlasma h;
  return h;
}

HardEdgePlasma::HardEdgePlasma() {
  const GaussRule base = gauss_legendre(kNodes);
  for (int k = 0; k < kLevels; ++k) {
    Level& lv = levels_[k];
    lv.panels = 4 << k;
    const double width = kT / lv.panels;
    for (int p = 0; p < lv.panels; ++p) {
      const double a = -kT + p * width;
      for (int i = 0; i < kNodes; ++i) {
        const double t = a + 0.5 * width * (base.x[i] + 1.0);
        const double g = plasma_F(-t) / plasma_F(t);
        lv.t.push_back(t);
        lv.w.push_back(0.5 * width * base.w[i] * g / kSqrt2Pi);
      }
    }
  }

  // Taylor coefficients at 0 of m(t) = e^{-t^2/2} F(-t) / F(t), then the
  // Watson coefficients (-1)^k k! m_k.
  constexpr int K = kWatsonTerms;
  long double f[K] = {}, fm[K] = {}, g[K] = {}, e[K] = {}, m[K] = {};
  f[0] = fm[0] = 0.5L;
  const long double inv_sqrt2pi = 0.398942280401432677939946059934381868L;
  long double fact = 1.0L, pow2 = 1.0L;
  for (int k = 0; 2 * k + 1 < K; ++k) {
    if (k > 0) {
      fact *= k;
      pow2 *= 2.0L;
    }
    const long double c = (k % 2 == 0 ? 1.0L : -1.0L) * inv_sqrt2pi / (pow2 * fact * (2 * k + 1));
    f[2 * k + 1] = -c;
    fm[2 * k + 1] = c;
    if (2 * k < K) e[2 * k] = (k % 2 == 0 ? 1.0L : -1.0L) / (pow2 * fact);
  }
  for (int n = 0; n < K; ++n) {
    long double acc = fm[n];
    for (int j = 1; j <= n; ++j) acc -= f[j] * g[n - j];
    g[n] = acc / f[0];
  }
  for (int n = 0; n < K; ++n)
    for (int i = 0; i <= n; ++i) m[n] += g[i] * e[n - i];
  long double kf = 1.0L;
  for (int k = 0; k < K; ++k) {
    if (k > 0) kf *= k;
    watson_[k] = double((k % 2 == 0 ? 1.0L : -1.0L) * kf * m[k]);
  }
}

Cpx HardEdgePlasma::weighted(Cpx L, Cpx u) const {
  const double a = u.real(), b = u.imag();
  Cpx result = weighted_F(L, u);

  if (std::abs(u) >= 20.0 && b * b - a * a >= 100.0) {
    // int_{-inf}^0 e^{ut} m(t) dt ~ sum_k (-1)^k k! m_k / u^{k+1}. The m_k
    // oscillate (complex singularities at |t| ~ 3.4), so every tabulated term
    // is used; for |u| >= 20 the last one is below 1e-26.
    const Cpx inv = 1.0 / u;
    Cpx power = inv, sum = 0.0;
    for (int k = 0; k < kWatsonTerms; ++k) {
      sum += watson_[k] * power;
      power *= inv;
    }
    return result + std::exp(L - 0.5 * u * u) / kSqrt2Pi * sum;
  }

  int k = 0;
  while (k + 1 < kLevels && std::abs(b) * (kT / levels_[k].panels) > 8.0) ++k;
  const Level& lv = levels_[k];
  const double width = kT / lv.panels;
  // real part of the exponent is Re L + b^2/2 - (a - t)^2/2
  const double base = L.real() + 0.5 * b * b;
  Cpx acc = 0.0;
  for (int p = 0; p < lv.panels; ++p) {
    const double lo = -kT + p * width, hi = lo + width;
    const double gap = a < lo ? lo - a : (a > hi ? a - hi : 0.0);
    if (base - 0.5 * gap * gap < -46.0) continue;
    for (int i = p * kNodes; i < (p + 1) * kNodes; ++i) {
      const Cpx d = u - lv.t[i];
      acc += lv.w[i] * std::exp(L - 0.5 * d * d);
    }
  }
  return result + acc;
}

double HardEdgePlasma::derivative(int order, double s) const {
  if (order < 0 || order > 2) throw DomainError("HardEdgePlasma::derivative order must be 0..2");
  const Level& lv = levels_[2];
  double acc = 0.0;
  for (std::size_t i = 0; i < lv.t.size(); ++i) {
    const double v = s - lv.t[i];
    const double h = order == 0 ? 1.0 : (order == 1 ? v : v * v - 1.0);
    acc += lv.w[i] * h * std::exp(-0.5 * v * v);
  }
  const double sign = order == 1 ? -1.0 : 1.0;
  return plasma_F_derivative(order, s) + sign * acc;
}

}  // namespace plasma
