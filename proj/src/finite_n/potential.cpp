#include <cmath>
#include <cstdio>
#include <string>

#include "plasma/errors.hpp"
#include "plasma/finite_n.hpp"
#include "plasma/special.hpp"

namespace plasma {

Potential Potential::power(double lambda) {
  if (!(lambda >= 1.0)) throw DomainError("power potential requires lambda >= 1");
  return {Kind::Power, lambda};
}

std::string to_string(const Potential& pot) {
  switch (pot.kind) {
    case Potential::Kind::Ginibre: return "ginibre";
    case Potential::Kind::HardEdgeGinibre: return "hard-edge";
    case Potential::Kind::Power: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "power:%.17g", pot.lambda);
      return buf;
    }
  }
  return "?";
}

Potential parse_potential(std::string_view text) {
  if (text == "ginibre") return Potential::ginibre();
  if (text == "hard-edge") return Potential::hard_edge();
  if (text.substr(0, 6) == "power:") {
    const std::string num(text.substr(6));
    std::size_t used = 0;
    double lambda = 0;
    try {
      lambda = std::stod(num, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != num.size()) throw DomainError("bad lambda in '" + std::string(text) + "'");
    return Potential::power(lambda);
  }
  throw DomainError("unknown potential '" + std::string(text) + "' (ginibre, power:<lambda>, hard-edge)");
}

double droplet_radius(const Potential& pot) {
  if (pot.kind == Potential::Kind::Power) return std::pow(pot.lambda, -1.0 / (2.0 * pot.lambda));
  return 1.0;
}

double potential_Q(const Potential& pot, Cpx zeta) {
  const double r2 = std::norm(zeta);
  switch (pot.kind) {
    case Potential::Kind::Ginibre: return r2;
    case Potential::Kind::Power: return std::pow(r2, pot.lambda);
    case Potential::Kind::HardEdgeGinibre: return r2 <= 1.0 ? r2 : kInf;
  }
  return r2;
}

double laplacian_Q(const Potential& pot, Cpx zeta) {
  if (pot.kind != Potential::Kind::Power) return 1.0;
  const double l = pot.lambda;
  if (l == 1.0) return 1.0;
  return l * l * std::pow(std::norm(zeta), l - 1.0);
}

double log_poly_norm_sq(const Potential& pot, int n, int j) {
  if (n < 1 || j < 0 || j >= n) throw DomainError("log_poly_norm_sq requires 0 <= j < n");
  const double logn = std::log(double(n));
  switch (pot.kind) {
    case Potential::Kind::Ginibre: return log_gamma(j + 1.0) - (j + 1) * logn;
    case Potential::Kind::Power: {
      const double s = (j + 1) / pot.lambda;
      return -std::log(pot.lambda) - s * logn + log_gamma(s);
    }
    case Potential::Kind::HardEdgeGinibre: return log_lower_inc_gamma(j + 1, n) - (j + 1) * logn;
  }
  return 0;
}

// ---- frames -----------------------------------------------------------------

Cpx RescaleFrame::to_plane(Cpx zeta) const { return std::polar(zoom, -theta) * (zeta - p); }

Cpx RescaleFrame::from_plane(Cpx z) const { return p + std::polar(1.0 / zoom, theta) * z; }

FrameKind parse_frame_kind(std::string_view text) {
  if (text == "bulk") return FrameKind::Bulk;
  if (text == "boundary") return FrameKind::Boundary;
  if (text == "singularity") return FrameKind::Singularity;
  throw DomainError("unknown frame '" + std::string(text) + "' (bulk, boundary, singularity)");
}

RescaleFrame bulk_frame(const Potential& pot, int n, Cpx p) {
  const double dq = laplacian_Q(pot, p);
  if (!(dq > 0.0)) throw DomainError("bulk frame needs Delta Q(p) > 0; use the singularity frame");
  if (std::abs(p) > droplet_radius(pot)) throw DomainError("bulk frame centre outside the droplet");
  return {p, 0.0, n, std::sqrt(n * dq)};
}

RescaleFrame boundary_frame(const Potential& pot, int n, double angle) {
  const Cpx p = std::polar(droplet_radius(pot), angle);
  return {p, angle, n, std::sqrt(n * laplacian_Q(pot, p))};
}

RescaleFrame singularity_frame(const Potential& pot, int n) {
  if (pot.kind != Potential::Kind::Power) throw DomainError("singularity frame requires a power potential");
  return {0.0, 0.0, n, std::pow(double(n), 1.0 / (2.0 * pot.lambda))};
}

RescaleFrame make_frame(const Potential& pot, int n, FrameKind kind) {
  switch (kind) {
    case FrameKind::Bulk:
      if (pot.kind == Potential::Kind::Power && pot.lambda > 1.0) return singularity_frame(pot, n);
      return bulk_frame(pot, n, 0.0);
    case FrameKind::Boundary: return boundary_frame(pot, n, 0.0);
    case FrameKind::Singularity: return singularity_frame(pot, n);
  }
  return bulk_frame(pot, n, 0.0);
}

Cpx rescaled_kernel(const FiniteKernel& K, const RescaleFrame& frame, Cpx z, Cpx w) {
  return K(frame.from_plane(z), frame.from_plane(w)) / (frame.zoom * frame.zoom);
}

Cpx rescaled_kernel(const Potential& pot, const RescaleFrame& frame, Cpx z, Cpx w) {
  return rescaled_kernel(FiniteKernel(pot, frame.n), frame, z, w);
}

Cpx cocycle_fix(int n, Cpx z, Cpx w) { return std::polar(1.0, -std::sqrt(double(n)) * (z - w).imag()); }

Cpx cocycle_fix(const RescaleFrame& frame, Cpx z, Cpx w) {
  const Cpx rot = std::conj(frame.p) * std::polar(1.0, frame.theta);
  return std::polar(1.0, -std::sqrt(double(frame.n)) * (rot * (z - w)).imag());
}

Cpx bulk_approx_kernel(int n, const RescaleFrame& frame, Cpx z, Cpx w) {
  const Cpx zeta = frame.from_plane(z), eta = frame.from_plane(w);
  const double nn = n;
  const Cpx expo = nn * (zeta * std::conj(eta)) - 0.5 * nn * (std::norm(zeta) + std::norm(eta));
  return nn * std::exp(expo) / (frame.zoom * frame.zoom);
}

Cpx psi_ratio(const FiniteKernel& K, const RescaleFrame& frame, Cpx z, Cpx w) {
  if (K.potential().kind != Potential::Kind::Ginibre)
    throw DomainError("the bulk approximation is available for the Ginibre potential only");
  const Cpx den = bulk_approx_kernel(K.n(), frame, z, w);
  if (std::abs(den) < 1e-300) throw DivisionNearZero("bulk approximation below 1e-300");
  return rescaled_kernel(K, frame, z, w) / den;
}

}  // namespace plasma
