#include <cmath>

#include "plasma/errors.hpp"
#include "plasma/finite_n.hpp"
#include "plasma/special.hpp"

namespace plasma {

double exp_section(int n, double x) {
  if (n < 1 || n > 1000000) throw DomainError("exp_section requires 1 <= n <= 1e6");
  const double rn = std::sqrt(double(n));
  const double base = n + rn * x;
  const double shift = n + rn * x;
  if (base == 0.0) return std::exp(-shift);
  const double log_base = std::log(std::abs(base));
  const bool alternate = base < 0.0;
  double sum = 0.0, comp = 0.0;
  for (int j = 0; j < n; ++j) {
    // for a positive base the term is a Poisson mass, whose saddle-point form
    // avoids cancelling j log(base) against log j!
    double t = alternate ? std::exp(j * log_base - log_gamma(j + 1.0) - shift) : std::exp(log_poisson_pmf(j, base));
    if (alternate && (j % 2 == 1)) t = -t;
    const double s = sum + t;
    comp += std::abs(sum) >= std::abs(t) ? (sum - s) + t : (t - s) + sum;
    sum = s;
  }
  return sum + comp;
}

}  // namespace plasma
