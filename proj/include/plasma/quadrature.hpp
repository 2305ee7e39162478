#pragma once

#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "plasma/errors.hpp"
#include "plasma/types.hpp"

namespace plasma {

struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

// Gauss-Legendre rule on [-1, 1] by Newton iteration on P_n.
GaussRule gauss_legendre(int n);
// Same rule mapped to [a, b].
GaussRule gauss_legendre(int n, double a, double b);

inline double abs_value(double v) { return std::abs(v); }
inline double abs_value(Cpx v) { return std::abs(v); }

namespace detail {

inline constexpr double kKronrodX[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kKronrodW[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGaussW[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
auto gk15(F& f, double a, double b, double& err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  auto fc = f(c);
  auto kron = fc * kKronrodW[7];
  auto gauss = fc * kGaussW[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kKronrodX[i];
    auto s = f(c - dx) + f(c + dx);
    kron += s * kKronrodW[i];
    if (i % 2 == 1) gauss += s * kGaussW[i / 2];
  }
  err = abs_value((kron - gauss) * h);
  return kron * h;
}

}  // namespace detail

struct AdaptiveOptions {
  double abs_tol = 1e-14;
  double rel_tol = 1e-13;
  int max_intervals = 4000;
};

// Globally adaptive Gauss-Kronrod 7/15 on a finite interval.
template <class F>
auto integrate_adaptive(F f, double a, double b, const AdaptiveOptions& opt = {}) {
  using R = decltype(f(a));
  struct Piece {
    double a, b, err;
    R val;
    bool operator<(const Piece& o) const { return err < o.err; }
  };
  std::priority_queue<Piece> heap;
  double err = 0.0;
  R total = detail::gk15(f, a, b, err);
  double total_err = err;
  heap.push({a, b, err, total});
  int intervals = 1;
  while (total_err > std::max(opt.abs_tol, opt.rel_tol * abs_value(total))) {
    if (intervals >= opt.max_intervals) {
      throw QuadratureNotConverged("adaptive quadrature: interval budget exhausted, error estimate " +
                                   std::to_string(total_err));
    }
    Piece p = heap.top();
    heap.pop();
    const double m = 0.5 * (p.a + p.b);
    double e1 = 0.0, e2 = 0.0;
    R v1 = detail::gk15(f, p.a, m, e1);
    R v2 = detail::gk15(f, m, p.b, e2);
    total += v1 + v2 - p.val;
    total_err += e1 + e2 - p.err;
    heap.push({p.a, m, e1, v1});
    heap.push({m, p.b, e2, v2});
    ++intervals;
    if (total_err < 0) total_err = 0;  // cancellation in the running sum
  }
  // resum to shed accumulated rounding in the running total
  R sum = R(0);
  total_err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().val;
    heap.pop();
  }
  return sum;
}

// int_a^inf f by t = a + s / (1 - s), s in [0, 1).
template <class F>
auto integrate_to_infinity(F f, double a, const AdaptiveOptions& opt = {}) {
  auto g = [&](double s) {
    const double one_minus = 1.0 - s;
    const double t = a + s / one_minus;
    return f(t) * (1.0 / (one_minus * one_minus));
  };
  return integrate_adaptive(g, 0.0, 1.0, opt);
}

}  // namespace plasma
