#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "plasma/grid.hpp"
#include "plasma/types.hpp"

namespace plasma {

// ---- kernel specifications --------------------------------------------------

struct GinibreBulk {};

// Phi = sum_k weight_k (gamma * 1_{I_k}). A single unit-weight interval is the
// connected case; several terms give disconnected sets or constant symbols.
struct FreeBoundary {
  struct Term {
    double weight;
    IntervalR interval;
  };
  std::vector<Term> terms;

  static FreeBoundary half_line(double a = 0.0) { return {{{1.0, {-kInf, a}}}}; }
  static FreeBoundary interval(IntervalR I) { return {{{1.0, I}}}; }
  static FreeBoundary constant(double c) { return {{{c, {-kInf, kInf}}}}; }
};

struct HardEdge {};

struct MittagLeffler {
  double lambda = 2.0;
};

using LimitKernelSpec = std::variant<GinibreBulk, FreeBoundary, HardEdge, MittagLeffler>;

std::string to_string(const LimitKernelSpec& spec);
// ginibre-bulk | free-boundary[:a | :lo1,hi1,lo2,hi2,...] | constant:c |
// hard-edge | mittag-leffler:lambda
LimitKernelSpec parse_limit_spec(std::string_view text);

// Phi(u) for a free-boundary symbol
Cpx symbol_value(const FreeBoundary& fb, Cpx u);
// real derivatives of Phi, order 0..2
double symbol_derivative(const FreeBoundary& fb, int order, double s);

// ---- kernels and intensities ------------------------------------------------

// G(z, w) = exp(z conj(w) - |z|^2/2 - |w|^2/2)
Cpx ginibre_G(Cpx z, Cpx w);

Cpx limit_kernel(const LimitKernelSpec& spec, Cpx z, Cpx w);
// G (1 - Phi(z + conj w)); GinibreBulk and FreeBoundary only
Cpx complementary_kernel(const LimitKernelSpec& spec, Cpx z, Cpx w);

double one_point(const LimitKernelSpec& spec, Cpx z);
// |K(z, w)|^2 / K(z, z). Throws ZeroIntensity when K(z, z) < 1e-300.
double berezin(const LimitKernelSpec& spec, Cpx z, Cpx w);
// R(z) - B(a, z): intensity at z given a particle at a
double conditional_intensity(const LimitKernelSpec& spec, Cpx a, Cpx z);

// Delta log R with Delta = d dbar. Analytic for the translation-invariant
// kernels, fourth-order finite differences (step 1e-3) for Mittag-Leffler.
double laplacian_log_R(const LimitKernelSpec& spec, Cpx z);

// Right-hand side of Ward's equation: R - Delta Q - Delta log R, with
// Delta Q = 1, or lambda^2 |z|^{2(lambda-1)} for Mittag-Leffler.
double ward_rhs(const LimitKernelSpec& spec, Cpx z);

// ---- plane integrals --------------------------------------------------------

struct QuadratureConfig {
  double r_max = 8.0;
  int n_radial = 96;   // Gauss-Legendre
  int n_angular = 128; // trapezoid
};

// "r_max,nr,na"
QuadratureConfig parse_quad(std::string_view text);

// C(z) = int B(z, w) / (z - w) dA(w)
Cpx cauchy_transform(const LimitKernelSpec& spec, Cpx z, const QuadratureConfig& quad = {});
// int B(z, w) dA(w) - 1
double mass_one_residual(const LimitKernelSpec& spec, Cpx z, const QuadratureConfig& quad = {});
// int K(t, z) K(w, t) dA(t) - K(w, z); FreeBoundary or HardEdge
Cpx polarized_mass_one_residual(const LimitKernelSpec& spec, Cpx z, Cpx w,
                                const QuadratureConfig& quad = {});

struct WardOptions {
  GridSpec grid;
  QuadratureConfig quad;
  double fd_step = 1e-3;
  double disc_radius = kInf;  // keep only |z| <= disc_radius
  bool puncture_origin = false;
};

// dbar C - [R - Delta Q - Delta log R] on the grid. Hard-edge grids are
// clipped to Re z <= -2 fd_step.
ResidualReport ward_residual(const LimitKernelSpec& spec, const WardOptions& opt);

// ---- series identities for R(z) = F(2x) --------------------------------------

// F(2x) - sum_{n <= N} F^{(n)}(2x)^2 / n!
double mass_one_series_residual(double x, int N);
// sum_{n <= N} F^{(n)}(s) F^{(n+1)}(s) / n! - F'(s) / 2
double hermite_identity_residual(double s, int N);
// sum_{n=1}^{N} (n h_{n-1}(s)^2 - h_n(s)^2) / n! - 1
double telescoping_residual(double s, int N);

// ---- one-dimensional statements -------------------------------------------

struct Quad1D {
  double abs_tol = 1e-15;
  double rel_tol = 1e-14;
  double cutoff = 30.0;  // integrand below 1e-190 beyond
};

// int t (F(2t - a) - 1_{t<0}) dt; the edge sits at a / 2.
double eighth_formula(const Quad1D& quad = {}, double a = 0.0);

struct TailBounds {
  double exterior_sup = 0;  // sup_{x >= 0} R(x) e^{2x^2}
  double interior_sup = 0;  // sup_{x <= 0} |R(x) - 1| e^{l x^2}
  double ell = 0.4;
  ResidualReport report;    // per-point scaled values
};

TailBounds tail_bounds_report(const LimitKernelSpec& spec, const std::vector<double>& x_grid,
                              double ell = 0.4);

// ---- positivity and inequalities ---------------------------------------------

double gram_min_eig(const LimitKernelSpec& spec, const std::vector<Cpx>& points, bool complementary);

struct InequalityOptions {
  std::vector<double> f_grid;  // real points for F - F^2 >= e^{-x^2}/4
  std::vector<Cpx> h_points;   // Re z < 0
  int ecu_pairs = 200;
  double ecu_box = 3.0;        // pairs drawn from [-box, box]^2
  std::uint64_t seed = 1;
};

InequalityOptions default_inequality_options();

struct InequalityResult {
  double f_min = 0;      // min of F - F^2 - e^{-x^2}/4
  double h_min = 0;      // min of H(2x) log 2 - e^{-|z|^2} |H(z)|^2
  double ecu_min = 0;    // min of F(2x)F(2u) - e^{-|z-w|^2} |F(z + conj w)|^2
  double f_sharp = 0;    // F margin at x = 0
  double h_sharp = 0;    // H margin at z = 0
  ResidualReport report; // all margins, in the order f, h, ecu
};

InequalityResult inequality_suite(const InequalityOptions& opt);

}  // namespace plasma
