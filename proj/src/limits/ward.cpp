#include <cmath>
#include <string>

#include "plasma/errors.hpp"
#include "plasma/limits.hpp"
#include "plasma/parallel.hpp"
#include "plasma/plane_quadrature.hpp"

namespace plasma {

namespace {

// Kernels whose Berezin transform has 1/|v|^2 tails need the exterior strips.
bool needs_exterior(const LimitKernelSpec& spec) {
  return std::holds_alternative<FreeBoundary>(spec) || std::holds_alternative<HardEdge>(spec);
}

double domain_clip(const LimitKernelSpec& spec, Cpx centre) {
  return std::holds_alternative<HardEdge>(spec) ? -centre.real() : kInf;
}

double checked_one_point(const LimitKernelSpec& spec, Cpx z) {
  const double R = one_point(spec, z);
  if (!(R >= 1e-300)) throw ZeroIntensity("one-point function vanishes at z");
  return R;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

QuadratureConfig parse_quad(std::string_view text) {
  QuadratureConfig q;
  const std::string s(text);
  char tail = 0;
  if (std::sscanf(s.c_str(), "%lf,%d,%d%c", &q.r_max, &q.n_radial, &q.n_angular, &tail) != 3)
    throw DomainError("quadrature must look like r_max,nr,na");
  if (!(q.r_max > 0) || q.n_radial < 2 || q.n_angular < 4) throw DomainError("quadrature needs r_max > 0, nr >= 2, na >= 4");
  return q;
}

Cpx cauchy_transform(const LimitKernelSpec& spec, Cpx z, const QuadratureConfig& quad) {
  const double R = checked_one_point(spec, z);
  const PlaneRule rule = build_plane_rule(quad, domain_clip(spec, z), needs_exterior(spec));
  Cpx acc = 0.0;
  for (std::size_t k = 0; k < rule.v.size(); ++k)
    acc += rule.cauchy[k] * std::norm(limit_kernel(spec, z, z + rule.v[k]));
  // 1 / (z - w) = -1 / v
  return -acc / R;
}

double mass_one_residual(const LimitKernelSpec& spec, Cpx z, const QuadratureConfig& quad) {
  const double R = checked_one_point(spec, z);
  const PlaneRule rule = build_plane_rule(quad, domain_clip(spec, z), needs_exterior(spec));
  double acc = 0.0;
  for (std::size_t k = 0; k < rule.v.size(); ++k) acc += rule.area[k] * std::norm(limit_kernel(spec, z, z + rule.v[k]));
  return acc / R - 1.0;
}

Cpx polarized_mass_one_residual(const LimitKernelSpec& spec, Cpx z, Cpx w, const QuadratureConfig& quad) {
  if (!std::holds_alternative<FreeBoundary>(spec) && !std::holds_alternative<HardEdge>(spec))
    throw DomainError("polarized mass-one needs a free-boundary or hard-edge spec");
  if (std::holds_alternative<HardEdge>(spec) && !(z.real() < 0 && w.real() < 0))
    throw DomainError("hard-edge polarized mass-one needs Re z, Re w < 0");
  const Cpx centre = 0.5 * (z + w);
  const PlaneRule rule = build_plane_rule(quad, domain_clip(spec, centre), true);
  Cpx acc = 0.0;
  for (std::size_t k = 0; k < rule.v.size(); ++k) {
    const Cpx t = centre + rule.v[k];
    acc += rule.area[k] * limit_kernel(spec, t, z) * limit_kernel(spec, w, t);
  }
  return acc - limit_kernel(spec, w, z);
}

ResidualReport ward_residual(const LimitKernelSpec& spec, const WardOptions& opt) {
  const double h = opt.fd_step;
  if (!(h > 0)) throw DomainError("fd_step must be positive");
  const bool hard = std::holds_alternative<HardEdge>(spec);
  ResidualReport rep;
  for (const Cpx z : opt.grid.points()) {
    if (hard && z.real() > -2.0 * h * (1.0 + 1e-9)) continue;
    if (std::abs(z) > opt.disc_radius * (1.0 + 1e-12)) continue;
    if (opt.puncture_origin && std::abs(z) < 2.0 * h) continue;
    rep.points.push_back(z);
  }
  rep.values.assign(rep.points.size(), Cpx(0.0));
  rep.residuals.assign(rep.points.size(), 0.0);
  parallel_for(rep.points.size(), [&](std::size_t i) {
    const Cpx z = rep.points[i];
    auto C = [&](Cpx p) { return cauchy_transform(spec, p, opt.quad); };
    auto d = [&](Cpx e) {
      return (C(z - 2.0 * h * e) - 8.0 * C(z - h * e) + 8.0 * C(z + h * e) - C(z + 2.0 * h * e)) / (12.0 * h);
    };
    const Cpx dbar = 0.5 * (d(Cpx(1, 0)) + Cpx(0, 1) * d(Cpx(0, 1)));
    rep.values[i] = dbar - ward_rhs(spec, z);
    rep.residuals[i] = std::abs(rep.values[i]);
  });
  rep.cell_area = opt.grid.step * opt.grid.step;
  rep.finalize();
  rep.params = {{"spec", to_string(spec)},
                {"r_max", num(opt.quad.r_max)},
                {"n_radial", std::to_string(opt.quad.n_radial)},
                {"n_angular", std::to_string(opt.quad.n_angular)},
                {"fd_step", num(h)},
                {"grid_step", num(opt.grid.step)}};
  return rep;
}

}  // namespace plasma
