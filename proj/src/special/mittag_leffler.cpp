#include <cmath>
#include <string>
#include <vector>

#include "plasma/errors.hpp"
#include "plasma/special.hpp"

namespace plasma {

namespace {

constexpr int kMaxTerms = 100000;
constexpr double kLogMax = 709.0;

// Neumaier-compensated complex accumulator
struct CompSum {
  double re = 0, im = 0, cre = 0, cim = 0;

  static void add(double& s, double& c, double v) {
    const double t = s + v;
    if (std::abs(s) >= std::abs(v)) c += (s - t) + v;
    else c += (v - t) + s;
    s = t;
  }
  void add(Cpx v) {
    add(re, cre, v.real());
    add(im, cim, v.imag());
  }
  Cpx value() const { return {re + cre, im + cim}; }
};

// log Gamma((j + 1) / lambda), cached per thread for the last lambda used
double log_gamma_at(double lambda, int j) {
  thread_local double cached_lambda = 0.0;
  thread_local std::vector<double> table;
  if (lambda != cached_lambda) {
    table.clear();
    cached_lambda = lambda;
  }
  while (int(table.size()) <= j) table.push_back(log_gamma((table.size() + 1) / lambda));
  return table[j];
}

void check_lambda(double lambda) {
  if (!(lambda >= 1.0 && lambda <= 10.0))
    throw DomainError("Mittag-Leffler function requires lambda in [1, 10]");
}

// Sum of lambda z^j / Gamma((j+1)/lambda) e^{-shift}. With limit > 0 exactly
// `limit` terms are taken, otherwise the relative truncation rule applies.
Cpx ml_series(double lambda, Cpx z, double shift, int limit, bool overflow_is_error) {
  const double log_lambda = std::log(lambda);
  const double mod = std::abs(z);
  if (mod == 0.0) return std::exp(log_lambda - log_gamma(1.0 / lambda) - shift);
  const double log_mod = std::log(mod);
  const Cpx rot = z / mod;
  Cpx unit = 1.0;
  CompSum sum;
  int small_run = 0;
  double prev_log = -kInf;
  const int cap = limit > 0 ? limit : kMaxTerms;
  for (int j = 0; j < cap; ++j) {
    const double log_term = log_lambda + j * log_mod - log_gamma_at(lambda, j) - shift;
    if (log_term > kLogMax) {
      if (overflow_is_error) throw OverflowError("Mittag-Leffler term overflows");
      return {kInf, kInf};
    }
    sum.add(std::exp(log_term) * unit);
    unit *= rot;
    if (limit > 0) continue;
    const double partial = std::abs(sum.value());
    if (std::exp(log_term) < 1e-18 * partial) {
      if (++small_run >= 5) return sum.value();
    } else {
      small_run = 0;
    }
    // past the peak and below the smallest subnormal: nothing more can register
    if (log_term < prev_log && log_term < -760.0) return sum.value();
    prev_log = log_term;
  }
  if (limit > 0) return sum.value();
  throw SeriesNotConverged("Mittag-Leffler series: " + std::to_string(kMaxTerms) +
                           " terms exhausted");
}

}  // namespace

Cpx mittag_leffler_M(double lambda, Cpx z) {
  check_lambda(lambda);
  const Cpx v = ml_series(lambda, z, 0.0, 0, true);
  if (!finite(v)) throw OverflowError("Mittag-Leffler value not representable");
  return v;
}

Cpx mittag_leffler_scaled(double lambda, Cpx z, double shift) {
  check_lambda(lambda);
  return ml_series(lambda, z, shift, 0, true);
}

Cpx mittag_leffler_partial(double lambda, Cpx z, int N) {
  check_lambda(lambda);
  if (N <= 0) return 0.0;
  return ml_series(lambda, z, 0.0, N, true);
}

}  // namespace plasma
