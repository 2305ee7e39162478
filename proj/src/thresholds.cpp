#include "plasma/thresholds.hpp"

#include <stdexcept>
#include <string>

namespace plasma {

const std::vector<Threshold>& thresholds() {
  static const std::vector<Threshold> table = {
      {"hard_edge.H0", 1e-8, "|H(0) - log 2|"},
      {"eighth.value", 1e-8, "|eighth formula - 1/8|"},
      {"eighth.shift_min", 1e-3, "shifted edge a = 0.5 must deviate from 1/8 by more than this"},
      {"mass_one.free_boundary", 1e-6, "|int B dA - 1|, free-boundary kernels"},
      {"mass_one.hard_edge", 1e-4, "|int B dA - 1|, hard edge"},
      {"mass_one.mittag_leffler", 1e-4, "|int B dA - 1|, Mittag-Leffler"},
      {"mass_one.ginibre_bulk", 1e-8, "|int B dA - 1|, bulk"},
      {"mass_one.constant_tol", 1e-9, "constant symbol 1/2: residual within this of -1/2"},
      {"ward.ginibre_bulk", 1e-8, "sup Ward residual, bulk, [-2,2]^2"},
      {"ward.free_boundary", 5e-4, "sup Ward residual, free boundary, [-2,2]^2"},
      {"ward.hard_edge", 1e-3, "sup Ward residual, hard edge, [-2,-0.2]x[-1,1]"},
      {"ward.mittag_leffler", 5e-3, "sup type-lambda Ward residual, |z| <= 1.5 punctured"},
      {"ward.disconnected_factor", 20.0, "disconnected-symbol residual over connected noise floor, at least"},
      {"series.residual", 1e-10, "mass-one series, Hermite identity and telescoping sum, N = 80"},
      {"finite_n.boundary_sup", 0.03, "sup_{[-3,3]} |R_n(x) - F(2x)| at n = 1024"},
      {"finite_n.ratio_lo", 2.5, "error ratio n = 64 over n = 1024, lower"},
      {"finite_n.ratio_hi", 6.5, "error ratio n = 64 over n = 1024, upper"},
      {"finite_n.bulk", 1e-3, "|R_n(0) - 1| in the bulk frame at n = 1024"},
      {"sections.value", 0.02, "|section(4096, x) - e^{x^2/4} F(x)| on [-2, 2]"},
      {"positivity.min_eig", -1e-9, "Gram matrix minimum eigenvalue, at least"},
      {"tail.exterior", 0.2, "sup_{[0,3]} F(2x) e^{2x^2}"},
      {"tail.interior", 1.0, "sup_{[-3,0]} |F(2x) - 1| e^{0.4 x^2}"},
      {"inequality.margin", -1e-10, "inequality margins, at least"},
      {"inequality.sharp", 1e-6, "margin at the sharpness points, at most"},
      {"polarized.free_boundary", 1e-6, "|polarized mass-one residual|, free boundary"},
      {"polarized.hard_edge", 1e-4, "|polarized mass-one residual|, hard edge"},
      {"sampler.sigmas", 3.0, "allowed standard errors per histogram bin"},
      {"sampler.bias", 0.02, "allowed bias per histogram bin"},
      {"conditional.self", 1e-12, "|R^(0)(0)|"},
      {"conditional.bulk", 1e-10, "|R^(0)(z) - (1 - e^{-|z|^2})|"},
  };
  return table;
}

double threshold(std::string_view key) {
  for (const auto& t : thresholds())
    if (key == t.key) return t.value;
  throw std::out_of_range("unknown threshold '" + std::string(key) + "'");
}

}  // namespace plasma
