#include <cmath>

#include "plasma/errors.hpp"
#include "plasma/special.hpp"

namespace plasma {

Cpx hermite_prob(int n, Cpx z) {
  if (n < 0 || n > 400) throw DomainError("hermite_prob requires 0 <= n <= 400");
  if (n == 0) return 1.0;
  Cpx prev = 1.0, cur = z;
  for (int k = 2; k <= n; ++k) {
    const Cpx next = z * cur - double(k - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_prob(int n, double x) { return hermite_prob(n, Cpx(x)).real(); }

void ScaledHermite::advance() {
  // sqrt(k+1) p_{k+1} = s p_k - sqrt(k) p_{k-1}
  const double next = (s_ * cur_ - std::sqrt(double(k_)) * prev_) / std::sqrt(double(k_ + 1));
  prev_ = cur_;
  cur_ = next;
  ++k_;
}

}  // namespace plasma
