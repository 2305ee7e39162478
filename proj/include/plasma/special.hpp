#pragma once

#include <array>
#include <vector>

#include "plasma/types.hpp"

namespace plasma {

// ---- error function --------------------------------------------------------

struct ErfcResult {
  Cpx value;
  bool in_envelope;  // |z| <= 30
};

// erfc on the complex plane. Power series of erf near the origin and away
// from the right half plane, Laplace continued fraction elsewhere.
// Throws OverflowError when the value is not representable.
Cpx erfc_cpx(Cpx z);
ErfcResult erfc_checked(Cpx z);

// exp(z^2) erfc(z), bounded for Re z >= 0.
Cpx erfcx_cpx(Cpx z);

// ---- Gaussian plasma function ---------------------------------------------

// F(z) = erfc(z / sqrt 2) / 2
Cpx plasma_F(Cpx z);
double plasma_F(double x);

// exp(L) * F(u) without forming either factor. Stays finite whenever the
// product does, which is the case for every kernel evaluation here.
Cpx weighted_F(Cpx L, Cpx u);

Cpx gauss_gamma(Cpx z);
double gauss_gamma(double x);

// (gamma * 1_I)(z) = F(z - hi) - F(z - lo)
Cpx conv_indicator(Cpx z, const IntervalR& I);

// n-th real derivative of F, n <= 200.
double plasma_F_derivative(int n, double s);

// ---- hard-edge plasma function --------------------------------------------

// H(z) = int_{-inf}^0 gamma(z - t) / F(t) dt by adaptive Gauss-Kronrod on
// [-12, 0] plus the Gaussian tail F(z + 12). The dropped tail correction is
// below 2e-33 in relative terms. Throws QuadratureNotConverged when the
// subdivision budget runs out.
Cpx hard_edge_H(Cpx z);

// Fast evaluator for kernel work. Splits H = F + int gamma(u - t) g(t) dt
// with g = F(-t) / F(t) and uses fixed composite Gauss-Legendre panels, or
// a Watson expansion when |Im u| dominates.
class HardEdgePlasma {
 public:
  static const HardEdgePlasma& instance();

  // exp(L) H(u)
  Cpx weighted(Cpx L, Cpx u) const;
  Cpx operator()(Cpx u) const { return weighted(Cpx(0.0), u); }

  // H^{(order)}(s) for real s, order in 0..2
  double derivative(int order, double s) const;

 private:
  HardEdgePlasma();

  static constexpr int kNodes = 20;
  static constexpr int kLevels = 8;
  static constexpr double kT = 12.0;
  static constexpr int kWatsonTerms = 48;

  struct Level {
    int panels;
    std::vector<double> t;  // nodes, panel-major
    std::vector<double> w;  // weights times g(t) / sqrt(2 pi)
  };

  std::array<Level, kLevels> levels_;
  std::array<double, kWatsonTerms> watson_;  // (-1)^k k! c_k
};

// ---- Hermite polynomials ----------------------------------------------------

// Probabilists' Hermite h_n, n <= 400.
Cpx hermite_prob(int n, Cpx z);
double hermite_prob(int n, double x);

// Iterates p_k = h_k(s) / sqrt(k!), the scaling under which products
// h_{k-1} h_k / k! stay bounded.
class ScaledHermite {
 public:
  explicit ScaledHermite(double s) : s_(s) {}

  int index() const { return k_; }
  double value() const { return cur_; }
  double previous() const { return prev_; }
  void advance();

 private:
  double s_;
  int k_ = 0;
  double prev_ = 0.0;
  double cur_ = 1.0;
};

// ---- gamma family ----------------------------------------------------------

// log Gamma(x), x > 0. Lanczos below 10, Stirling series above.
double log_gamma(double x);

// log of the Poisson probability P(N = k), N ~ Po(mean). Saddle-point form,
// accurate for large k and mean.
double log_poisson_pmf(long k, double mean);

// log P(Po(mean) <= k) and log P(Po(mean) > k)
double log_poisson_cdf(long k, double mean);
double log_poisson_sf(long k, double mean);

// Lower incomplete gamma gamma(s, x) for integer s, via
// gamma(s, x) = (s - 1)! P(Po(x) >= s).
double lower_inc_gamma(long s, double x);
double log_lower_inc_gamma(long s, double x);

// Regularized lower incomplete gamma P(a, x) for real a > 0.
double gamma_p(double a, double x);
// Inverse in x of gamma_p(a, .). Requires 0 <= p < 1.
double gamma_p_inv(double a, double p);

// ---- Mittag-Leffler --------------------------------------------------------

// M_lambda(z) = lambda sum_j z^j / Gamma((j + 1) / lambda), lambda in [1, 10].
// Throws SeriesNotConverged after 1e5 terms, OverflowError when the value
// does not fit in a double.
Cpx mittag_leffler_M(double lambda, Cpx z);

// exp(-shift) M_lambda(z). Terms are formed in log space so the sum never
// overflows when the scaled value is moderate.
Cpx mittag_leffler_scaled(double lambda, Cpx z, double shift);

// First N terms only.
Cpx mittag_leffler_partial(double lambda, Cpx z, int N);

}  // namespace plasma
