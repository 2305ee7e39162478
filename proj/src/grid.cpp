#include "plasma/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "plasma/errors.hpp"
#include "plasma/parallel.hpp"

namespace plasma {

namespace {

int lattice_count(double a, double b, double step) {
  if (!(step > 0.0) || !(b >= a)) throw DomainError("grid requires a <= b and step > 0");
  return int(std::floor((b - a) / step + 1e-9)) + 1;
}

std::vector<double> split_numbers(std::string_view text, char sep) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find(sep, start);
    const std::string piece(text.substr(start, end == std::string_view::npos ? text.npos : end - start));
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(piece, &used);
    } catch (const std::exception&) {
      throw DomainError("not a number: '" + piece + "'");
    }
    if (used != piece.size()) throw DomainError("not a number: '" + piece + "'");
    out.push_back(v);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

int GridSpec::nx() const { return lattice_count(x0, x1, step); }
int GridSpec::ny() const { return lattice_count(y0, y1, step); }

std::vector<Cpx> GridSpec::points() const {
  std::vector<Cpx> out;
  const int mx = nx(), my = ny();
  out.reserve(std::size_t(mx) * my);
  for (int iy = 0; iy < my; ++iy)
    for (int ix = 0; ix < mx; ++ix) out.push_back(point(ix, iy));
  return out;
}

GridSpec parse_grid(std::string_view text) {
  const std::size_t comma = text.find(',');
  const auto main = split_numbers(text.substr(0, comma), ':');
  if (main.size() != 3) throw DomainError("grid must look like a:b:step");
  GridSpec g{main[0], main[1], main[0], main[1], main[2]};
  if (comma != std::string_view::npos) {
    const auto yr = split_numbers(text.substr(comma + 1), ':');
    if (yr.size() != 2) throw DomainError("grid y-range must look like c:d");
    g.y0 = yr[0];
    g.y1 = yr[1];
  }
  g.nx();
  g.ny();
  return g;
}

KernelGrid fill_grid(const GridSpec& grid, const std::function<Cpx(Cpx)>& f) {
  KernelGrid out;
  out.origin = {grid.x0, grid.y0};
  out.step = grid.step;
  out.nx = grid.nx();
  out.ny = grid.ny();
  out.values.assign(std::size_t(out.nx) * out.ny, Cpx(0.0));
  parallel_for(out.values.size(), [&](std::size_t k) {
    out.values[k] = f(out.point(int(k % out.nx), int(k / out.nx)));
  });
  return out;
}

double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

void ResidualReport::finalize() {
  sup_norm = 0.0;
  std::vector<double> sq(residuals.size());
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    sup_norm = std::max(sup_norm, std::abs(residuals[i]));
    sq[i] = residuals[i] * residuals[i];
  }
  l2_norm = std::sqrt(cell_area * pairwise_sum(sq.data(), sq.size()));
}

}  // namespace plasma
