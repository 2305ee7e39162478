#include <algorithm>
#include <cmath>

#include "plasma/errors.hpp"
#include "plasma/limits.hpp"
#include "plasma/linalg.hpp"
#include "plasma/rng.hpp"
#include "plasma/special.hpp"

namespace plasma {

double gram_min_eig(const LimitKernelSpec& spec, const std::vector<Cpx>& points, bool complementary) {
  const int n = int(points.size());
  if (n < 1 || n > 32) throw DomainError("gram_min_eig takes 1 to 32 points");
  CMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = complementary ? complementary_kernel(spec, points[i], points[j]) : limit_kernel(spec, points[i], points[j]);
  return hermitian_eigenvalues(m).front();
}

InequalityOptions default_inequality_options() {
  InequalityOptions opt;
  for (int i = 0; i <= 200; ++i) opt.f_grid.push_back(-5.0 + 0.05 * i);
  for (int ix = 0; ix < 30; ++ix)
    for (int iy = 0; iy <= 40; ++iy) opt.h_points.push_back({-3.0 + 0.1 * ix, -2.0 + 0.1 * iy});
  return opt;
}

InequalityResult inequality_suite(const InequalityOptions& opt) {
  InequalityResult out;
  auto& rep = out.report;
  auto record = [&](Cpx where, double margin) {
    rep.points.push_back(where);
    rep.values.push_back(margin);
    rep.residuals.push_back(std::min(margin, 0.0));
  };

  auto f_margin = [](double x) {
    const double F = plasma_F(x);
    return F - F * F - 0.25 * std::exp(-x * x);
  };
  out.f_min = kInf;
  for (const double x : opt.f_grid) {
    const double m = f_margin(x);
    out.f_min = std::min(out.f_min, m);
    record(x, m);
  }
  out.f_sharp = f_margin(0.0);

  // |H(z)|^2 <= e^{|z|^2} H(2x) log 2, both sides times e^{-|z|^2}
  const auto& H = HardEdgePlasma::instance();
  auto h_margin = [&](Cpx z) {
    const double lhs = std::norm(H.weighted(-0.5 * std::norm(z), z));
    return H(2.0 * z.real()).real() * kLn2 - lhs;
  };
  out.h_min = kInf;
  for (const Cpx z : opt.h_points) {
    if (!(z.real() < 0.0)) throw DomainError("H inequality points need Re z < 0");
    const double m = h_margin(z);
    out.h_min = std::min(out.h_min, m);
    record(z, m);
  }
  out.h_sharp = h_margin(0.0);

  // |F(z + conj w)|^2 <= e^{|z-w|^2} F(2 Re z) F(2 Re w), both sides times e^{-|z-w|^2}
  Rng rng(opt.seed, 0);
  out.ecu_min = kInf;
  for (int k = 0; k < opt.ecu_pairs; ++k) {
    const double b = opt.ecu_box;
    const Cpx z(b * (2 * rng.uniform() - 1), b * (2 * rng.uniform() - 1));
    const Cpx w(b * (2 * rng.uniform() - 1), b * (2 * rng.uniform() - 1));
    const Cpx L = z * std::conj(w) - 0.5 * (std::norm(z) + std::norm(w));
    const double m = plasma_F(2 * z.real()) * plasma_F(2 * w.real()) - std::norm(weighted_F(L, z + std::conj(w)));
    out.ecu_min = std::min(out.ecu_min, m);
    record(z, m);
  }
  if (opt.f_grid.empty()) out.f_min = 0;
  if (opt.h_points.empty()) out.h_min = 0;
  if (opt.ecu_pairs == 0) out.ecu_min = 0;
  rep.finalize();
  return out;
}

}  // namespace plasma
