#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "plasma/grid.hpp"
#include "plasma/types.hpp"

namespace plasma {

struct Potential {
  enum class Kind { Ginibre, Power, HardEdgeGinibre };
  Kind kind = Kind::Ginibre;
  double lambda = 1.0;  // Power only

  static Potential ginibre() { return {}; }
  static Potential power(double lambda);
  static Potential hard_edge() { return {Kind::HardEdgeGinibre, 1.0}; }
};

std::string to_string(const Potential& pot);
// "ginibre", "power:<lambda>", "hard-edge"
Potential parse_potential(std::string_view text);

double droplet_radius(const Potential& pot);
// Q(zeta); +inf outside the unit disc for the hard edge
double potential_Q(const Potential& pot, Cpx zeta);
// Delta Q with Delta = d dbar (a quarter of the usual Laplacian)
double laplacian_Q(const Potential& pot, Cpx zeta);
// log ||zeta^j||^2 in L^2(e^{-nQ} dA), dA = d^2 zeta / pi
double log_poly_norm_sq(const Potential& pot, int n, int j);

// K_n(zeta, eta) with the squared norms tabulated once.
class FiniteKernel {
 public:
  FiniteKernel(const Potential& pot, int n);

  const Potential& potential() const { return pot_; }
  int n() const { return n_; }
  Cpx operator()(Cpx zeta, Cpx eta) const;
  double diagonal(Cpx zeta) const { return (*this)(zeta, zeta).real(); }

 private:
  double log_term(int j, double log_mod) const { return j * log_mod - log_norm_[j]; }

  Potential pot_;
  int n_;
  std::vector<double> log_norm_;
};

Cpx kernel_finite_n(const Potential& pot, int n, Cpx zeta, Cpx eta);

// z = e^{-i theta} zoom (zeta - p)
struct RescaleFrame {
  Cpx p;
  double theta = 0;
  int n = 1;
  double zoom = 1;

  Cpx to_plane(Cpx zeta) const;
  Cpx from_plane(Cpx z) const;
};

enum class FrameKind { Bulk, Boundary, Singularity };
FrameKind parse_frame_kind(std::string_view text);

RescaleFrame bulk_frame(const Potential& pot, int n, Cpx p = 0.0);
// p on the droplet circle at polar angle `angle`, theta the outward normal
RescaleFrame boundary_frame(const Potential& pot, int n, double angle = 0.0);
// zoom n^{1/(2 lambda)} at the origin
RescaleFrame singularity_frame(const Potential& pot, int n);
RescaleFrame make_frame(const Potential& pot, int n, FrameKind kind);

Cpx rescaled_kernel(const FiniteKernel& K, const RescaleFrame& frame, Cpx z, Cpx w);
Cpx rescaled_kernel(const Potential& pot, const RescaleFrame& frame, Cpx z, Cpx w);

// conj of c_n(z, w) = exp(i sqrt(n) Im(z - w))
Cpx cocycle_fix(int n, Cpx z, Cpx w);
// Same factor for an arbitrary Ginibre frame: exp(-i sqrt(n) Im(conj(p) e^{i theta} (z - w)))
Cpx cocycle_fix(const RescaleFrame& frame, Cpx z, Cpx w);

// Rescaled n exp(n zeta conj(eta) - n|zeta|^2/2 - n|eta|^2/2), Ginibre only.
Cpx bulk_approx_kernel(int n, const RescaleFrame& frame, Cpx z, Cpx w);
// rescaled_kernel / bulk_approx_kernel; DivisionNearZero below 1e-300.
Cpx psi_ratio(const FiniteKernel& K, const RescaleFrame& frame, Cpx z, Cpx w);

// s_n(n + sqrt(n) x) e^{-n - sqrt(n) x}, s_n the n-term exponential section
double exp_section(int n, double x);

}  // namespace plasma
