#include "plasma/plane_quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "plasma/errors.hpp"
#include "plasma/quadrature.hpp"

namespace plasma {

namespace {

void add_polar(PlaneRule& rule, double r, double phi, double wr, double wphi) {
  const Cpx dir = std::polar(1.0, phi);
  rule.v.push_back(r * dir);
  rule.area.push_back(r * wr * wphi / kPi);
  rule.cauchy.push_back(wr * wphi / kPi * std::conj(dir));
}

void add_cartesian(PlaneRule& rule, Cpx v, double jac) {
  rule.v.push_back(v);
  rule.area.push_back(jac / kPi);
  rule.cauchy.push_back(jac / kPi / v);
}

}  // namespace

PlaneRule build_plane_rule(const QuadratureConfig& quad, double clip, bool exterior) {
  // With exterior strips the core disc only has to hold the Gaussian part;
  // a small core keeps the ridge along the imaginary direction resolved.
  const double R = exterior ? std::min(quad.r_max, 4.0) : quad.r_max;
  const int nr = quad.n_radial, na = quad.n_angular;
  if (!(R > 0) || nr < 2 || na < 4) throw DomainError("quadrature config needs r_max > 0, nr >= 2, na >= 4");
  if (!(clip > 0)) throw DomainError("plane rule centre must lie inside the domain");

  PlaneRule rule;
  const GaussRule unit = gauss_legendre(nr, 0.0, 1.0);

  if (clip >= R) {
    const double wphi = 2 * kPi / na;
    for (int k = 0; k < na; ++k)
      for (int i = 0; i < nr; ++i) add_polar(rule, R * unit.x[i], k * wphi, R * unit.w[i], wphi);
  } else {
    // the chord Re v = clip cuts the disc at phi = +-phi0
    const double phi0 = std::acos(clip / R);
    const int n_in = std::max(16, int(std::lround(na * phi0 / kPi)));
    const int n_out = std::max(16, na - n_in);
    const GaussRule inner = gauss_legendre(n_in, -phi0, phi0);
    for (int k = 0; k < n_in; ++k) {
      const double rmax = clip / std::cos(inner.x[k]);
      for (int i = 0; i < nr; ++i) add_polar(rule, rmax * unit.x[i], inner.x[k], rmax * unit.w[i], inner.w[k]);
    }
    const GaussRule outer = gauss_legendre(n_out, phi0, 2 * kPi - phi0);
    for (int k = 0; k < n_out; ++k)
      for (int i = 0; i < nr; ++i) add_polar(rule, R * unit.x[i], outer.x[k], R * unit.w[i], outer.w[k]);
  }

  if (!exterior) return rule;

  const double L = 0.5 * R;     // tangent map scale
  const double S = quad.r_max;  // width of the side strips
  const double half_pi = 0.5 * kPi;

  // caps: |Re v| <= R above and below the disc, t = R cos a + L tan th
  const double s_hi = std::min(R, clip);
  const GaussRule alpha = gauss_legendre(std::max(8, na / 2), -half_pi, std::asin(s_hi / R));
  const GaussRule theta = gauss_legendre(std::max(8, nr / 2), 0.0, half_pi);
  for (std::size_t a = 0; a < alpha.x.size(); ++a) {
    const double s = R * std::sin(alpha.x[a]);
    const double t0 = R * std::cos(alpha.x[a]);
    const double ja = R * std::cos(alpha.x[a]) * alpha.w[a];
    for (std::size_t b = 0; b < theta.x.size(); ++b) {
      const double c = std::cos(theta.x[b]);
      const double t = t0 + L * std::tan(theta.x[b]);
      const double jac = ja * L / (c * c) * theta.w[b];
      add_cartesian(rule, Cpx(s, t), jac);
      add_cartesian(rule, Cpx(s, -t), jac);
    }
  }

  // side strips R < |Re v| < R + S over the whole imaginary direction
  const GaussRule full = gauss_legendre(std::max(8, nr), -half_pi, half_pi);
  auto strip = [&](double s0, double s1) {
    if (!(s1 > s0)) return;
    const GaussRule sr = gauss_legendre(std::max(8, nr / 3), s0, s1);
    for (std::size_t a = 0; a < sr.x.size(); ++a)
      for (std::size_t b = 0; b < full.x.size(); ++b) {
        const double c = std::cos(full.x[b]);
        add_cartesian(rule, Cpx(sr.x[a], L * std::tan(full.x[b])), sr.w[a] * L / (c * c) * full.w[b]);
      }
  };
  strip(-R - S, -R);
  strip(R, std::min(R + S, clip));
  return rule;
}

}  // namespace plasma
