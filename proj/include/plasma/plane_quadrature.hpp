#pragma once

#include <vector>

#include "plasma/limits.hpp"
#include "plasma/types.hpp"

namespace plasma {

// Nodes v (offsets from a centre) for integrals over {Re v < clip} with
// respect to dA = d^2 v / pi. Inside the core disc the nodes are polar, so
// the Cauchy weight area / v is finite at the centre. Without `exterior` the
// core radius is r_max and everything outside is dropped. With `exterior`
// the core radius is min(r_max, 4) and the rest of |Re v| <= core + r_max is
// covered by tangent-mapped strips, which carry integrands with 1/|v|^2 tails
// along the imaginary direction.
struct PlaneRule {
  std::vector<Cpx> v;
  std::vector<double> area;
  std::vector<Cpx> cauchy;  // area / v
};

PlaneRule build_plane_rule(const QuadratureConfig& quad, double clip, bool exterior);

}  // namespace plasma
