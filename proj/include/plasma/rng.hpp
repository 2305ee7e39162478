#pragma once

#include <cstdint>
#include <random>

namespace plasma {

std::uint64_t splitmix64(std::uint64_t x);

// Stream for (seed, stream) built on mt19937_64, whose output sequence is
// fixed by the standard. The transforms below are written out so that draws
// do not depend on the standard library implementation.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t bits() { return engine_(); }
  // uniform on (0, 1), 53 random bits, never 0
  double uniform();
  // standard normal, Marsaglia polar method
  double normal();
  // Gamma(shape, 1), Marsaglia-Tsang; shape < 1 boosted by U^{1/shape}
  double gamma(double shape);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace plasma
