#include <cmath>

#include "plasma/errors.hpp"
#include "plasma/limits.hpp"
#include "plasma/quadrature.hpp"
#include "plasma/special.hpp"

namespace plasma {

namespace {

void check_order(int N) {
  if (N < 0 || N > 200) throw DomainError("series order must be in [0, 200]");
}

}  // namespace

// With p_k = h_k / sqrt(k!) and F^{(n)} = (-1)^n h_{n-1} gamma for n >= 1:
//   F^{(n)}^2 / n!              = p_{n-1}^2 gamma^2 / n
//   F^{(n)} F^{(n+1)} / n!      = -p_{n-1} p_n gamma^2 / sqrt(n)
//   (n h_{n-1}^2 - h_n^2) / n!  = p_{n-1}^2 - p_n^2

double mass_one_series_residual(double x, int N) {
  check_order(N);
  const double s = 2.0 * x;
  const double F = plasma_F(s), g2 = gauss_gamma(s) * gauss_gamma(s);
  double sum = F * F;
  ScaledHermite p(s);
  for (int n = 1; n <= N; ++n) {
    sum += p.value() * p.value() * g2 / n;  // p holds p_{n-1}
    p.advance();
  }
  return F - sum;
}

double hermite_identity_residual(double s, int N) {
  check_order(N);
  const double F = plasma_F(s), g = gauss_gamma(s), g2 = g * g;
  double sum = -F * g;
  ScaledHermite p(s);
  for (int n = 1; n <= N; ++n) {
    const double prev = p.value();
    p.advance();
    sum -= prev * p.value() * g2 / std::sqrt(double(n));
  }
  return sum + 0.5 * g;
}

double telescoping_residual(double s, int N) {
  check_order(N);
  double sum = 0.0;
  ScaledHermite p(s);
  for (int n = 1; n <= N; ++n) {
    const double prev = p.value();
    p.advance();
    sum += prev * prev - p.value() * p.value();
  }
  return sum - 1.0;
}

double eighth_formula(const Quad1D& quad, double a) {
  // Folding t < 0 onto t > 0 with F(-s) = 1 - F(s):
  //   int t (F(2t - a) - 1_{t<0}) dt = int_0^inf t [F(2t - a) + F(2t + a)] dt
  AdaptiveOptions opt;
  opt.abs_tol = quad.abs_tol;
  opt.rel_tol = quad.rel_tol;
  auto f = [a](double t) { return t * (plasma_F(2.0 * t - a) + plasma_F(2.0 * t + a)); };
  return integrate_adaptive(f, 0.0, quad.cutoff, opt);
}

TailBounds tail_bounds_report(const LimitKernelSpec& spec, const std::vector<double>& x_grid, double ell) {
  if (!std::holds_alternative<FreeBoundary>(spec)) throw DomainError("tail bounds need a free-boundary spec");
  TailBounds out;
  out.ell = ell;
  for (const double x : x_grid) {
    const double R = one_point(spec, x);
    double v;
    if (x >= 0.0) {
      v = R * std::exp(2.0 * x * x);
      out.exterior_sup = std::max(out.exterior_sup, v);
    }
    if (x <= 0.0) {
      v = std::abs(R - 1.0) * std::exp(ell * x * x);
      out.interior_sup = std::max(out.interior_sup, v);
    }
    out.report.points.push_back(x);
    out.report.values.push_back(v);
    out.report.residuals.push_back(v);
  }
  out.report.cell_area = x_grid.size() > 1 ? std::abs(x_grid[1] - x_grid[0]) : 1.0;
  out.report.finalize();
  out.report.params = {{"spec", to_string(spec)}};
  return out;
}

}  // namespace plasma
