#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "plasma/errors.hpp"
#include "plasma/parallel.hpp"
#include "plasma/rng.hpp"
#include "plasma/sampler.hpp"
#include "plasma/special.hpp"

using namespace plasma;
using oracle::ld;

namespace {

// two-sided Kolmogorov-Smirnov statistic
template <class Cdf>
double ks_statistic(std::vector<double> xs, Cdf cdf) {
  std::sort(xs.begin(), xs.end());
  const double m = double(xs.size());
  double d = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double c = cdf(xs[i]);
    d = std::max({d, (i + 1) / m - c, c - i / m});
  }
  return d;
}

// average of an intensity f(r) over the annulus a <= r <= b in area measure
template <class F>
double annulus_mean(F f, double a, double b) {
  const ld total = oracle::gauss_panels([&](ld r) { return f(r) * 2 * r; }, a, b, 8);
  return double(total / (ld(b) * b - ld(a) * a));
}

// Ginibre: rescaled intensity at radius r is P(Poisson(n r^2) <= n - 1)
ld ginibre_intensity(int n, ld r) { return oracle::poisson_cdf(n * r * r, n - 1); }

// hard edge: sum_k (n r^2)^k e^{-n r^2} / (k! P(Poisson(n) >= k + 1))
ld hard_edge_intensity(int n, ld r) {
  if (r > 1) return 0;
  const ld mu = n * r * r;
  ld sum = 0;
  for (int k = 0; k < n; ++k) {
    const ld pmf = std::exp(k * std::log(mu) - mu - std::lgamma(ld(k + 1)));
    sum += pmf / (1 - oracle::poisson_cdf(n, k));
  }
  return sum;
}

// lambda sum_k x^k / Gamma((k + 1) / lambda)
ld ml_series(ld lambda, ld x) {
  if (x == 0) return lambda / std::tgamma(1 / lambda);
  ld sum = 0;
  for (int k = 0; k < 400; ++k) sum += std::exp(k * std::log(x) - std::lgamma((k + 1) / lambda));
  return lambda * sum;
}

}  // namespace

TEST_CASE("random variate moments") {
  Rng rng(3, 0);
  const int m = 200000;
  double su = 0, sn = 0, sn2 = 0;
  for (int i = 0; i < m; ++i) {
    const double u = rng.uniform();
    CHECK_FALSE(u <= 0.0);
    su += u;
    const double z = rng.normal();
    sn += z;
    sn2 += z * z;
  }
  CHECK(std::abs(su / m - 0.5) < 5 * std::sqrt(1.0 / 12 / m));
  CHECK(std::abs(sn / m) < 5 / std::sqrt(double(m)));
  CHECK(std::abs(sn2 / m - 1) < 5 * std::sqrt(2.0 / m));
  for (double shape : {0.4, 1.0, 2.5, 30.0}) {
    Rng g(11, 1);
    double s = 0, s2 = 0;
    for (int i = 0; i < m; ++i) {
      const double x = g.gamma(shape);
      s += x;
      s2 += x * x;
    }
    const double mean = s / m, var = s2 / m - mean * mean;
    CHECK(std::abs(mean - shape) < 5 * std::sqrt(shape / m));
    CHECK(var == doctest::Approx(shape).epsilon(0.05));
  }
}

TEST_CASE("streams are reproducible and distinct") {
  Rng a(9, 4), b(9, 4), c(9, 5);
  for (int i = 0; i < 10; ++i) {
    const auto x = a.bits();
    CHECK(x == b.bits());
    CHECK(x != c.bits());
  }
}

TEST_CASE("single-particle Ginibre modulus") {
  const SampleConfig cfg{Potential::ginibre(), 1, 100000, 17};
  double sum = 0;
  for (long t = 0; t < cfg.trials; ++t) sum += std::pow(sample_radii(cfg, t)[0], 2);
  CHECK(std::abs(sum / cfg.trials - 1.0) < 5 / std::sqrt(double(cfg.trials)));
}

TEST_CASE("hard-edge radii stay in the unit disc") {
  const SampleConfig cfg{Potential::hard_edge(), 200, 200, 5};
  for (long t = 0; t < cfg.trials; ++t) {
    const auto r = sample_radii(cfg, t);
    CHECK(std::is_sorted(r.begin(), r.end()));
    CHECK(r.back() <= 1.0);
  }
}

TEST_CASE("radial law of a single index") {
  // power 2, j = 3, n = 10: t = r^4 has CDF 1 - e^{-10 t}(1 + 10 t)
  const SampleConfig cfg{Potential::power(2.0), 10, 20000, 23};
  auto cdf = [](double r) {
    const double t = 10 * std::pow(r, 4);
    return 1 - std::exp(-t) * (1 + t);
  };
  for (const auto method : {RadialMethod::Variate, RadialMethod::InverseCdf}) {
    std::vector<double> xs;
    for (long t = 0; t < cfg.trials; ++t) xs.push_back(sample_radii_by_index(cfg, t, method)[3]);
    // 1% critical value
    CHECK(ks_statistic(xs, cdf) < 1.63 / std::sqrt(double(cfg.trials)));
  }
}

TEST_CASE("inverse-CDF draws couple hard edge below Ginibre") {
  SampleConfig g{Potential::ginibre(), 50, 100, 31}, h = g;
  h.pot = Potential::hard_edge();
  for (long t = 0; t < g.trials; ++t) {
    const auto a = sample_radii_by_index(g, t, RadialMethod::InverseCdf);
    const auto b = sample_radii_by_index(h, t, RadialMethod::InverseCdf);
    for (int j = 0; j < g.n; ++j) CHECK(b[j] <= a[j] * (1 + 1e-12));
  }
}

TEST_CASE("budget and domain checks") {
  CHECK_THROWS_AS(check_budget({Potential::ginibre(), 100000, 100000, 0}), BudgetExceeded);
  CHECK_NOTHROW(check_budget({Potential::ginibre(), 1000, 1000000, 0}));
  CHECK_THROWS_AS(check_budget({Potential::ginibre(), 0, 10, 0}), DomainError);
}

TEST_CASE("Ginibre boundary profile against the exact finite-n intensity") {
  const SampleConfig cfg{Potential::ginibre(), 200, 3000, 99};
  const RescaleFrame fr = boundary_frame(cfg.pot, cfg.n);
  const Histogram1D h = boundary_profile(cfg, fr, {-3, 1, 16});
  CHECK(h.total() == (long long)cfg.n * cfg.trials);
  int outside = 0;
  for (int i = 0; i < h.bins; ++i) {
    const double ra = 1 + (h.lo + i * h.width()) / fr.zoom, rb = ra + h.width() / fr.zoom;
    const double ref = annulus_mean([&](ld r) { return ginibre_intensity(cfg.n, r); }, ra, rb);
    if (std::abs(h.estimate[i] - ref) > 4 * h.stderr_of_estimate[i] + 1e-3) ++outside;
  }
  CHECK(outside == 0);
}

TEST_CASE("hard-edge boundary profile against the exact finite-n intensity") {
  const SampleConfig cfg{Potential::hard_edge(), 100, 3000, 7};
  const RescaleFrame fr = boundary_frame(cfg.pot, cfg.n);
  const Histogram1D h = boundary_profile(cfg, fr, {-3, 1, 16});
  CHECK(h.total() == (long long)cfg.n * cfg.trials);
  int outside = 0;
  for (int i = 0; i < h.bins; ++i) {
    const double ra = 1 + (h.lo + i * h.width()) / fr.zoom, rb = ra + h.width() / fr.zoom;
    if (ra >= 1) {
      CHECK(h.counts[i] == 0);
      continue;
    }
    const double ref = annulus_mean([&](ld r) { return hard_edge_intensity(cfg.n, r); }, ra, std::min(rb, 1.0));
    const double scale = (std::min(rb, 1.0) * std::min(rb, 1.0) - ra * ra) / (rb * rb - ra * ra);
    if (std::abs(h.estimate[i] - ref * scale) > 4 * h.stderr_of_estimate[i] + 1e-3) ++outside;
  }
  CHECK(outside == 0);
}

TEST_CASE("histograms do not depend on the thread count") {
  const SampleConfig cfg{Potential::ginibre(), 64, 500, 2024};
  const RescaleFrame fr = boundary_frame(cfg.pot, cfg.n);
  const int saved = thread_count();
  set_thread_count(1);
  const Histogram1D a = boundary_profile(cfg, fr, {});
  set_thread_count(4);
  const Histogram1D b = boundary_profile(cfg, fr, {});
  set_thread_count(saved);
  CHECK(a.counts == b.counts);
  CHECK(a.estimate == b.estimate);
  CHECK(a.stderr_of_estimate == b.stderr_of_estimate);
}

TEST_CASE("series oracle for the radial Mittag-Leffler intensity") {
  for (double x : {0.0, 0.3, 2.0, 9.0})
    CHECK(mittag_leffler_M(2.0, x).real() == doctest::Approx(double(ml_series(2, x))).epsilon(1e-12));
  CHECK(double(ml_series(2, 0)) == doctest::Approx(2 / std::sqrt(M_PI)).epsilon(1e-15));
}

TEST_CASE("profiles near the conical singularity") {
  for (const double lambda : {1.0, 2.0}) {
    const SampleConfig cfg{Potential::power(lambda), 100, 20000, 41};
    const Histogram1D h = bulk_singularity_profile(cfg, {0, 2, 10});
    int outside = 0;
    for (int i = 0; i < h.bins; ++i) {
      const double a = h.lo + i * h.width(), b = a + h.width();
      const double ref = annulus_mean(
          [&](ld s) { return ml_series(lambda, s * s) * std::exp(-std::pow(s, 2 * ld(lambda))); }, a, b);
      if (lambda == 1.0) CHECK(ref == doctest::Approx(1.0).epsilon(1e-12));
      if (std::abs(h.estimate[i] - ref) > 4 * h.stderr_of_estimate[i] + 1e-3) ++outside;
    }
    CHECK(outside == 0);
  }
  CHECK_THROWS_AS(bulk_singularity_profile({Potential::ginibre(), 10, 10, 1}, {}), DomainError);
}
