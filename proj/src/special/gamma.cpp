#include <cmath>
#include <limits>

#include "plasma/errors.hpp"
#include "plasma/special.hpp"

namespace plasma {

namespace {

constexpr double kHalfLog2Pi = 0.918938533204672741780329736405617640;

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {0.99999999999980993,     676.5203681218851,
                                -1259.1392167224028,     771.32342877765313,
                                -176.61502916214059,     12.507343278686905,
                                -0.13857109526572012,    9.9843695780195716e-6,
                                1.5056327351493116e-7};

double lanczos_log_gamma(double x) {
  if (x < 0.5) return std::log(kPi / std::sin(kPi * x)) - lanczos_log_gamma(1.0 - x);
  x -= 1.0;
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i);
  const double t = x + kLanczosG + 0.5;
  return kHalfLog2Pi + (x + 0.5) * std::log(t) - t + std::log(a);
}

// log Gamma(n + 1) - [(n + 1/2) log n - n + log sqrt(2 pi)]
double stirling_error(double n) {
  constexpr double S0 = 1.0 / 12, S1 = 1.0 / 360, S2 = 1.0 / 1260, S3 = 1.0 / 1680,
                   S4 = 1.0 / 1188;
  if (n <= 15.0) return log_gamma(n + 1.0) - (n + 0.5) * std::log(n) + n - kHalfLog2Pi;
  const double nn = n * n;
  return (S0 - (S1 - (S2 - (S3 - S4 / nn) / nn) / nn) / nn) / n;
}

// x log(x / m) + m - x, without cancellation when x is close to m
double deviance(double x, double m) {
  if (std::abs(x - m) < 0.1 * (x + m)) {
    const double v = (x - m) / (x + m);
    double s = (x - m) * v;
    double ej = 2.0 * x * v;
    const double v2 = v * v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v2;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
    return s;
  }
  return x * std::log(x / m) + m - x;
}

double log1mexp(double a) {
  // log(1 - e^a), a <= 0
  return a > -kLn2 ? std::log(-std::expm1(a)) : std::log1p(-std::exp(a));
}

// log sum_{i<=k} pmf(i) for k < mean, summed downward from the largest term.
double log_cdf_below_mean(long k, double mean) {
  const double anchor = log_poisson_pmf(k, mean);
  double term = 1.0, sum = 1.0;
  for (long i = k; i > 0; --i) {
    term *= double(i) / mean;
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return anchor + std::log(sum);
}

// log sum_{i>k} pmf(i) for k + 1 >= mean, summed upward from the largest term.
double log_sf_above_mean(long k, double mean) {
  const double anchor = log_poisson_pmf(k + 1, mean);
  double term = 1.0, sum = 1.0;
  for (long i = k + 2;; ++i) {
    term *= mean / double(i);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return anchor + std::log(sum);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  if (x < 10.0) return lanczos_log_gamma(x);
  const double r = 1.0 / x;
  const double r2 = r * r;
  const double series =
      r * (1.0 / 12 - r2 * (1.0 / 360 - r2 * (1.0 / 1260 - r2 * (1.0 / 1680 - r2 / 1188))));
  return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + series;
}

double log_poisson_pmf(long k, double mean) {
  if (k < 0) return -kInf;
  if (mean == 0.0) return k == 0 ? 0.0 : -kInf;
  if (k == 0) return -mean;
  const double x = double(k);
  return -stirling_error(x) - deviance(x, mean) - 0.5 * std::log(2.0 * kPi * x);
}

double log_poisson_cdf(long k, double mean) {
  if (k < 0) return -kInf;
  if (mean == 0.0) return 0.0;
  if (double(k) < mean) return log_cdf_below_mean(k, mean);
  return log1mexp(log_sf_above_mean(k, mean));
}

double log_poisson_sf(long k, double mean) {
  if (k < 0) return 0.0;
  if (mean == 0.0) return -kInf;
  if (double(k) + 1.0 >= mean) return log_sf_above_mean(k, mean);
  return log1mexp(log_cdf_below_mean(k, mean));
}

double log_lower_inc_gamma(long s, double x) {
  if (s < 1) throw DomainError("lower_inc_gamma requires s >= 1");
  if (x < 0.0) throw DomainError("lower_inc_gamma requires x >= 0");
  if (x == 0.0) return -kInf;
  return log_gamma(double(s)) + log_poisson_sf(s - 1, x);
}

double lower_inc_gamma(long s, double x) { return std::exp(log_lower_inc_gamma(s, x)); }

double gamma_p(double a, double x) {
  if (!(a > 0.0)) throw DomainError("gamma_p requires a > 0");
  if (x <= 0.0) return 0.0;
  if (a == std::floor(a) && a < 4e18) return std::exp(log_poisson_sf(long(a) - 1, x));
  const double log_pref = a * std::log(x) - x - log_gamma(a);
  if (x < a + 1.0) {
    double ap = a, del = 1.0 / a, sum = del;
    for (int n = 0; n < 100000; ++n) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-17) return std::exp(log_pref) * sum;
    }
    throw SeriesNotConverged("gamma_p series");
  }
  // Legendre continued fraction for the upper tail
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) return -std::expm1(log_pref + std::log(h));
  }
  throw SeriesNotConverged("gamma_p continued fraction");
}

double gamma_p_inv(double a, double p) {
  if (!(a > 0.0)) throw DomainError("gamma_p_inv requires a > 0");
  if (!(p >= 0.0 && p < 1.0)) throw DomainError("gamma_p_inv requires 0 <= p < 1");
  if (p == 0.0) return 0.0;
  const double lga = log_gamma(a);
  double lo = 0.0, hi = std::max(1.0, 2.0 * a);
  while (gamma_p(a, hi) < p) {
    lo = hi;
    hi *= 2.0;
  }
  // small-x asymptotics P ~ x^a / Gamma(a + 1) give a good start in the lower tail
  double x = std::exp((std::log(p) + lga + std::log(a)) / a);
  if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
  for (int it = 0; it < 300; ++it) {
    const double f = gamma_p(a, x) - p;
    if (f == 0.0) return x;
    if (f < 0.0) lo = x;
    else hi = x;
    const double pdf = std::exp((a - 1.0) * std::log(x) - x - lga);
    double next = x - f / pdf;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 4 * std::numeric_limits<double>::epsilon() * x) return next;
    if (hi - lo <= 4 * std::numeric_limits<double>::epsilon() * hi) return next;
    x = next;
  }
  return x;
}

}  // namespace plasma
