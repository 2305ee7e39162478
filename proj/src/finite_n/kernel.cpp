#include <cmath>

#include "plasma/errors.hpp"
#include "plasma/finite_n.hpp"
#include "plasma/special.hpp"

namespace plasma {

namespace {

// Neumaier accumulator for one real component
struct Comp {
  double s = 0, c = 0;
  void add(double v) {
    const double t = s + v;
    c += std::abs(s) >= std::abs(v) ? (s - t) + v : (v - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

// Terms below e^{-50} of the largest one are dropped.
constexpr double kDropped = 50.0;

}  // namespace

FiniteKernel::FiniteKernel(const Potential& pot, int n) : pot_(pot), n_(n) {
  if (n < 1 || n > (1 << 20)) throw DomainError("finite-n kernel requires 1 <= n <= 2^20");
  log_norm_.resize(n);
  if (pot.kind != Potential::Kind::HardEdgeGinibre) {
    for (int j = 0; j < n; ++j) log_norm_[j] = log_poly_norm_sq(pot, n, j);
    return;
  }
  // gamma(j+1, n) = j! (1 - P(Po(n) <= j)); for j < n the bracket stays
  // above ~1/2, so the cumulative sum is well conditioned.
  const double logn = std::log(double(n));
  Comp cdf;
  for (int j = 0; j < n; ++j) {
    cdf.add(std::exp(log_poisson_pmf(j, n)));
    log_norm_[j] = log_gamma(j + 1.0) + std::log1p(-cdf.value()) - (j + 1) * logn;
  }
}

Cpx FiniteKernel::operator()(Cpx zeta, Cpx eta) const {
  if (pot_.kind == Potential::Kind::HardEdgeGinibre && (std::norm(zeta) > 1.0 || std::norm(eta) > 1.0))
    return 0.0;
  const double shift = 0.5 * n_ * (potential_Q(pot_, zeta) + potential_Q(pot_, eta));
  const Cpx x = zeta * std::conj(eta);
  const double mod = std::abs(x);
  if (mod == 0.0) return std::exp(-log_norm_[0] - shift);
  const double log_mod = std::log(mod);

  // j log|x| - log_norm_j is concave in j; locate its maximum
  int lo = 0, hi = n_ - 1;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (log_term(mid + 1, log_mod) > log_term(mid, log_mod)) lo = mid + 1;
    else hi = mid;
  }
  const int peak = lo;
  const double top = log_term(peak, log_mod);
  const Cpx rot = x / mod;
  const Cpx start = std::polar(1.0, peak * std::arg(x));

  Comp re, im;
  Cpx unit = start;
  for (int j = peak; j < n_; ++j) {
    const double lt = log_term(j, log_mod);
    if (lt - top < -kDropped) break;
    const double m = std::exp(lt - shift);
    re.add(m * unit.real());
    im.add(m * unit.imag());
    unit *= rot;
  }
  const Cpx back = std::conj(rot);
  unit = start * back;
  for (int j = peak - 1; j >= 0; --j) {
    const double lt = log_term(j, log_mod);
    if (lt - top < -kDropped) break;
    const double m = std::exp(lt - shift);
    re.add(m * unit.real());
    im.add(m * unit.imag());
    unit *= back;
  }
  return {re.value(), im.value()};
}

Cpx kernel_finite_n(const Potential& pot, int n, Cpx zeta, Cpx eta) {
  return FiniteKernel(pot, n)(zeta, eta);
}

}  // namespace plasma
