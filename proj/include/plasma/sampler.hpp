#pragma once

#include <cstdint>
#include <vector>

#include "plasma/finite_n.hpp"

namespace plasma {

struct SampleConfig {
  Potential pot;
  int n = 1;
  long trials = 1;
  std::uint64_t seed = 0;
};

// Variate: |zeta_j|^{2 lambda} = Gamma((j+1)/lambda) / n (Ginibre and power
// potentials). InverseCdf: |zeta_j|^2 = P^{-1}(j+1, U) / n with the upper
// end truncated at |zeta| = 1 for the hard edge. The hard edge always uses
// InverseCdf; with InverseCdf the same uniforms drive every potential, which
// couples Ginibre and hard-edge draws monotonically.
enum class RadialMethod { Variate, InverseCdf };

// Throws BudgetExceeded when n * trials > 1e9.
void check_budget(const SampleConfig& cfg);

// Eigenvalue moduli of one trial, ascending.
std::vector<double> sample_radii(const SampleConfig& cfg, long trial, RadialMethod method = RadialMethod::Variate);
// Same draws, entry j holding the modulus with density ~ r^{2j+1} e^{-nQ(r)}.
std::vector<double> sample_radii_by_index(const SampleConfig& cfg, long trial,
                                          RadialMethod method = RadialMethod::Variate);

struct HistogramSpec {
  double lo = -3, hi = 1;
  int bins = 40;
};

struct Histogram1D {
  enum class Normalization { DensityPerUnitLength, RescaledIntensity };

  double lo = 0, hi = 1;
  int bins = 1;
  Normalization normalization = Normalization::RescaledIntensity;
  long trials = 0;
  std::vector<long long> counts;
  long long underflow = 0, overflow = 0;
  std::vector<double> estimate;
  std::vector<double> stderr_of_estimate;

  double width() const { return (hi - lo) / bins; }
  double center(int i) const { return lo + (i + 0.5) * width(); }
  long long total() const;  // in-range counts plus underflow and overflow
};

// Histogram of zoom (|zeta| - droplet radius), normalized to estimate the
// rescaled one-point function along the outward normal.
Histogram1D boundary_profile(const SampleConfig& cfg, const RescaleFrame& frame, const HistogramSpec& hist,
                             RadialMethod method = RadialMethod::Variate);

// Histogram of n^{1/(2 lambda)} |zeta| on [lo, hi], normalized so that it
// estimates the radial intensity M_lambda(s^2) e^{-s^{2 lambda}}.
Histogram1D bulk_singularity_profile(const SampleConfig& cfg, const HistogramSpec& hist);

}  // namespace plasma
