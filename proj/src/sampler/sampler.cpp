#include "plasma/sampler.hpp"

#include <algorithm>
#include <cmath>

#include "plasma/errors.hpp"
#include "plasma/parallel.hpp"
#include "plasma/rng.hpp"
#include "plasma/special.hpp"

namespace plasma {

namespace {

// P(j + 1, n) for the hard-edge truncation, one entry per index
std::vector<double> hard_edge_mass(int n) {
  std::vector<double> out(n);
  for (int j = 0; j < n; ++j) out[j] = gamma_p(j + 1.0, n);
  return out;
}

std::vector<double> draw(const SampleConfig& cfg, long trial, RadialMethod method,
                         const std::vector<double>& hard_mass) {
  Rng rng(cfg.seed, std::uint64_t(trial));
  const int n = cfg.n;
  std::vector<double> r(n);
  const bool hard = cfg.pot.kind == Potential::Kind::HardEdgeGinibre;
  if (hard || method == RadialMethod::InverseCdf) {
    const double lambda = cfg.pot.kind == Potential::Kind::Power ? cfg.pot.lambda : 1.0;
    for (int j = 0; j < n; ++j) {
      double u = rng.uniform();
      if (hard) u *= hard_mass[j];
      const double g = gamma_p_inv((j + 1) / lambda, u);
      r[j] = std::pow(g / n, 0.5 / lambda);
      if (hard) r[j] = std::min(r[j], 1.0);
    }
  } else {
    const double lambda = cfg.pot.kind == Potential::Kind::Power ? cfg.pot.lambda : 1.0;
    for (int j = 0; j < n; ++j) r[j] = std::pow(rng.gamma((j + 1) / lambda) / n, 0.5 / lambda);
  }
  return r;
}

// Per-bin sums of counts and squared counts over trials; integer arithmetic
// keeps the merge independent of how trials are split across workers.
struct Accumulator {
  std::vector<long long> s1, s2;
  long long under = 0, over = 0;
  explicit Accumulator(int bins) : s1(bins, 0), s2(bins, 0) {}
};

template <class MapFn>
Histogram1D accumulate(const SampleConfig& cfg, const HistogramSpec& spec, RadialMethod method, MapFn to_x) {
  check_budget(cfg);
  if (!(spec.hi > spec.lo) || spec.bins < 1) throw DomainError("histogram needs hi > lo and bins >= 1");
  const std::vector<double> hard_mass =
      cfg.pot.kind == Potential::Kind::HardEdgeGinibre ? hard_edge_mass(cfg.n) : std::vector<double>{};

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(thread_count(), cfg.trials));
  std::vector<Accumulator> parts(workers, Accumulator(spec.bins));
  const double width = (spec.hi - spec.lo) / spec.bins;
  parallel_for(workers, [&](std::size_t w) {
    Accumulator& acc = parts[w];
    std::vector<long long> local(spec.bins);
    const long begin = long(cfg.trials * w / workers), end = long(cfg.trials * (w + 1) / workers);
    for (long t = begin; t < end; ++t) {
      std::fill(local.begin(), local.end(), 0);
      for (const double r : draw(cfg, t, method, hard_mass)) {
        const double x = to_x(r);
        if (x < spec.lo) ++acc.under;
        else if (x >= spec.hi) ++acc.over;
        else ++local[std::min(spec.bins - 1, int((x - spec.lo) / width))];
      }
      for (int b = 0; b < spec.bins; ++b) {
        acc.s1[b] += local[b];
        acc.s2[b] += local[b] * local[b];
      }
    }
  });

  Histogram1D h;
  h.lo = spec.lo;
  h.hi = spec.hi;
  h.bins = spec.bins;
  h.trials = cfg.trials;
  h.counts.assign(spec.bins, 0);
  std::vector<long long> sq(spec.bins, 0);
  for (const auto& p : parts) {
    for (int b = 0; b < spec.bins; ++b) {
      h.counts[b] += p.s1[b];
      sq[b] += p.s2[b];
    }
    h.underflow += p.under;
    h.overflow += p.over;
  }
  h.estimate.resize(spec.bins);
  h.stderr_of_estimate.resize(spec.bins);
  const double T = double(cfg.trials);
  for (int b = 0; b < spec.bins; ++b) {
    const double mean = h.counts[b] / T;
    const double var = T > 1 ? std::max(0.0, (sq[b] / T - mean * mean) * T / (T - 1)) : 0.0;
    h.estimate[b] = mean;
    h.stderr_of_estimate[b] = std::sqrt(var / T);
  }
  return h;
}

}  // namespace

void check_budget(const SampleConfig& cfg) {
  if (cfg.n < 1 || cfg.trials < 1) throw DomainError("sampling needs n >= 1 and trials >= 1");
  if (double(cfg.n) * double(cfg.trials) > 1e9) throw BudgetExceeded("n * trials exceeds 1e9");
}

std::vector<double> sample_radii(const SampleConfig& cfg, long trial, RadialMethod method) {
  check_budget(cfg);
  const std::vector<double> hard_mass =
      cfg.pot.kind == Potential::Kind::HardEdgeGinibre ? hard_edge_mass(cfg.n) : std::vector<double>{};
  std::vector<double> r = draw(cfg, trial, method, hard_mass);
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<double> sample_radii_by_index(const SampleConfig& cfg, long trial, RadialMethod method) {
  check_budget(cfg);
  const std::vector<double> hard_mass =
      cfg.pot.kind == Potential::Kind::HardEdgeGinibre ? hard_edge_mass(cfg.n) : std::vector<double>{};
  return draw(cfg, trial, method, hard_mass);
}

long long Histogram1D::total() const {
  long long s = underflow + overflow;
  for (auto c : counts) s += c;
  return s;
}

Histogram1D boundary_profile(const SampleConfig& cfg, const RescaleFrame& frame, const HistogramSpec& spec,
                             RadialMethod method) {
  const double r0 = std::abs(frame.p), zoom = frame.zoom;
  Histogram1D h = accumulate(cfg, spec, method, [&](double r) { return zoom * (r - r0); });
  // expected count in an annulus is int R_n dA = zoom^2 R (r_b^2 - r_a^2)
  for (int b = 0; b < h.bins; ++b) {
    const double ra = std::max(0.0, r0 + (h.lo + b * h.width()) / zoom);
    const double rb = std::max(0.0, r0 + (h.lo + (b + 1) * h.width()) / zoom);
    const double area = (rb * rb - ra * ra) * zoom * zoom;
    h.estimate[b] = area > 0 ? h.estimate[b] / area : 0.0;
    h.stderr_of_estimate[b] = area > 0 ? h.stderr_of_estimate[b] / area : 0.0;
  }
  return h;
}

Histogram1D bulk_singularity_profile(const SampleConfig& cfg, const HistogramSpec& spec) {
  if (cfg.pot.kind != Potential::Kind::Power) throw DomainError("singularity profile needs a power potential");
  const double zoom = std::pow(double(cfg.n), 0.5 / cfg.pot.lambda);
  HistogramSpec s = spec;
  s.lo = std::max(0.0, spec.lo);
  Histogram1D h = accumulate(cfg, s, RadialMethod::Variate, [&](double r) { return zoom * r; });
  for (int b = 0; b < h.bins; ++b) {
    const double sa = h.lo + b * h.width(), sb = sa + h.width();
    const double area = sb * sb - sa * sa;
    h.estimate[b] /= area;
    h.stderr_of_estimate[b] /= area;
  }
  return h;
}

}  // namespace plasma
