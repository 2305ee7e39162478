#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "plasma/types.hpp"

namespace plasma {

// Rectangular lattice [x0, x1] x [y0, y1] with spacing `step`; both ends
// included when they fall on the lattice.
struct GridSpec {
  double x0 = -2, x1 = 2, y0 = -2, y1 = 2;
  double step = 0.5;

  int nx() const;
  int ny() const;
  Cpx point(int ix, int iy) const { return {x0 + ix * step, y0 + iy * step}; }
  std::vector<Cpx> points() const;  // row-major, y outer
};

// "a:b:step" gives the square [a, b]^2; "a:b:step,c:d" sets y-range [c, d].
GridSpec parse_grid(std::string_view text);

using Provenance = std::map<std::string, std::string>;

struct KernelGrid {
  Cpx origin;
  double step = 0;
  int nx = 0, ny = 0;
  std::vector<Cpx> values;  // row-major, y outer
  Provenance meta;

  Cpx point(int ix, int iy) const { return origin + Cpx(ix * step, iy * step); }
  Cpx& at(int ix, int iy) { return values[std::size_t(iy) * nx + ix]; }
  const Cpx& at(int ix, int iy) const { return values[std::size_t(iy) * nx + ix]; }
};

// Evaluates f at every grid point, in parallel, in a fixed layout.
KernelGrid fill_grid(const GridSpec& grid, const std::function<Cpx(Cpx)>& f);

// Residuals on an arbitrary point set; a rectangular grid with masked
// points is the usual case.
struct ResidualReport {
  std::vector<Cpx> points;
  std::vector<Cpx> values;     // complex residual where meaningful
  std::vector<double> residuals;
  double cell_area = 1.0;      // quadrature weight of each point for l2_norm
  double sup_norm = 0;
  double l2_norm = 0;
  Provenance params;

  // Recomputes sup_norm and l2_norm from residuals.
  void finalize();
};

// Sum in a fixed binary-tree order.
double pairwise_sum(const double* v, std::size_t n);

}  // namespace plasma
