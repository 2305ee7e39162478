#include "plasma/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <exception>
#include <functional>
#include <vector>

#include "plasma/errors.hpp"
#include "plasma/finite_n.hpp"
#include "plasma/limits.hpp"
#include "plasma/parallel.hpp"
#include "plasma/rng.hpp"
#include "plasma/sampler.hpp"
#include "plasma/special.hpp"
#include "plasma/thresholds.hpp"

namespace plasma {

namespace {

std::string format(const char* fmt, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  return buf;
}

std::vector<double> linspace_step(double a, double b, double step) {
  std::vector<double> out;
  const int n = int(std::floor((b - a) / step + 1e-9));
  for (int i = 0; i <= n; ++i) out.push_back(a + i * step);
  return out;
}

void hard_edge_H0(CriterionResult& r) {
  const double err = std::abs(hard_edge_H(0.0) - Cpx(kLn2));
  const double tol = threshold("hard_edge.H0");
  r.checks.push_back({format("|H(0) - log 2| = %.3e <= %.0e", err, tol), err <= tol});
}

void eighth(CriterionResult& r) {
  const double v = eighth_formula();
  const double tol = threshold("eighth.value");
  r.checks.push_back({format("1/8 formula = %.15f, |err| = %.3e <= %.0e", v, std::abs(v - 0.125), tol),
                      std::abs(v - 0.125) <= tol});
  const double s = eighth_formula({}, 0.5);
  const double gap = threshold("eighth.shift_min");
  r.checks.push_back({format("edge at a/2 = 0.25: value %.6f, deviation %.3e > %.0e", s, std::abs(s - 0.125), gap),
                      std::abs(s - 0.125) > gap});
}

void mass_one(CriterionResult& r) {
  auto run = [&](const char* name, const LimitKernelSpec& spec, std::vector<Cpx> pts, double tol) {
    double worst = 0;
    for (const Cpx z : pts) worst = std::max(worst, std::abs(mass_one_residual(spec, z)));
    r.checks.push_back({format("%s max |int B - 1| = %.3e <= %.0e", name, worst, tol), worst <= tol});
  };
  run("free-boundary", FreeBoundary::half_line(), {0.0, 1.0, Cpx(-1, 1), -2.0}, threshold("mass_one.free_boundary"));
  run("hard-edge", HardEdge{}, {-0.5, Cpx(-1, -1)}, threshold("mass_one.hard_edge"));
  run("mittag-leffler:2", MittagLeffler{2.0}, {0.0, 0.5, Cpx(1, 0.5)}, threshold("mass_one.mittag_leffler"));
  const double c = mass_one_residual(FreeBoundary::constant(0.5), Cpx(0.3, -0.2));
  const double tol = threshold("mass_one.constant_tol");
  r.checks.push_back({format("constant 1/2 residual = %.12f, |+0.5| = %.3e <= %.0e", c, std::abs(c + 0.5), tol),
                      std::abs(c + 0.5) <= tol});
}

void ward(CriterionResult& r) {
  auto run = [](const LimitKernelSpec& spec, const std::string& grid, double disc = kInf, bool puncture = false) {
    WardOptions opt;
    opt.grid = parse_grid(grid);
    opt.disc_radius = disc;
    opt.puncture_origin = puncture;
    return ward_residual(spec, opt);
  };
  const double gb = run(GinibreBulk{}, "-2:2:0.5").sup_norm;
  r.checks.push_back({format("bulk sup = %.3e <= %.0e", gb, threshold("ward.ginibre_bulk")),
                      gb <= threshold("ward.ginibre_bulk")});
  const double fb = run(FreeBoundary::half_line(), "-2:2:0.5").sup_norm;
  r.checks.push_back({format("free-boundary sup = %.3e <= %.0e", fb, threshold("ward.free_boundary")),
                      fb <= threshold("ward.free_boundary")});
  const double he = run(HardEdge{}, "-2:-0.2:0.3,-1:1").sup_norm;
  r.checks.push_back({format("hard-edge sup = %.3e <= %.0e", he, threshold("ward.hard_edge")),
                      he <= threshold("ward.hard_edge")});
  const double dc = run(parse_limit_spec("free-boundary:-2,-1,1,2"), "-2:2:1").sup_norm;
  const double factor = threshold("ward.disconnected_factor");
  // floor: the larger of the connected residual and the bulk round-off level
  const double floor = std::max(fb, gb);
  r.checks.push_back({format("disconnected sup = %.3e >= %.0f x floor %.3e", dc, factor, floor), dc >= factor * floor});
  const double ml = run(MittagLeffler{2.0}, "-1.5:1.5:0.25", 1.5, true).sup_norm;
  r.checks.push_back({format("mittag-leffler:2 sup = %.3e <= %.0e", ml, threshold("ward.mittag_leffler")),
                      ml <= threshold("ward.mittag_leffler")});
}

void series(CriterionResult& r) {
  const double tol = threshold("series.residual");
  double m1 = 0, hid = 0, m1_at = 0, hid_at = 0;
  for (const double x : linspace_step(-4, 4, 0.25)) {
    const double a = std::abs(mass_one_series_residual(x, 80));
    const double b = std::abs(hermite_identity_residual(x, 80));
    if (a > m1) m1 = a, m1_at = x;
    if (b > hid) hid = b, hid_at = x;
  }
  r.checks.push_back({format("mass-one series max = %.3e (x = %g) <= %.0e", m1, m1_at, tol), m1 <= tol});
  r.checks.push_back({format("Hermite identity max = %.3e (s = %g) <= %.0e", hid, hid_at, tol), hid <= tol});
  const double t = std::abs(telescoping_residual(1.2, 80));
  r.checks.push_back({format("telescoping |sum - 1| = %.3e <= %.0e", t, tol), t <= tol});
}

void finite_n(CriterionResult& r) {
  const Potential g = Potential::ginibre();
  auto boundary_sup = [&](int n) {
    const FiniteKernel K(g, n);
    const RescaleFrame fr = boundary_frame(g, n);
    double sup = 0;
    for (const double x : linspace_step(-3, 3, 0.01))
      sup = std::max(sup, std::abs(rescaled_kernel(K, fr, x, x).real() - plasma_F(2 * x)));
    return sup;
  };
  const double e64 = boundary_sup(64), e1024 = boundary_sup(1024);
  const double tol = threshold("finite_n.boundary_sup");
  r.checks.push_back({format("n = 1024 boundary sup = %.4e <= %.2f", e1024, tol), e1024 <= tol});
  const double ratio = e64 / e1024, lo = threshold("finite_n.ratio_lo"), hi = threshold("finite_n.ratio_hi");
  r.checks.push_back({format("error ratio 64/1024 = %.3f in [%.1f, %.1f]", ratio, lo, hi), ratio >= lo && ratio <= hi});
  const double bulk = std::abs(rescaled_kernel(g, bulk_frame(g, 1024), 0.0, 0.0).real() - 1.0);
  r.checks.push_back({format("bulk |R_n(0) - 1| = %.3e <= %.0e", bulk, threshold("finite_n.bulk")),
                      bulk <= threshold("finite_n.bulk")});
}

void sections(CriterionResult& r) {
  const double tol = threshold("sections.value");
  double worst = 0, at = 0, worst_f = 0, at_f = 0;
  for (const double x : linspace_step(-2, 2, 0.25)) {
    const double s = exp_section(4096, x);
    const double d = std::abs(s - std::exp(0.25 * x * x) * plasma_F(x));
    if (d > worst) worst = d, at = x;
    const double df = std::abs(s - plasma_F(x));
    if (df > worst_f) worst_f = df, at_f = x;
  }
  r.checks.push_back({format("max |s(4096, x) - e^{x^2/4} F(x)| = %.4f (x = %g) <= %.2f", worst, at, tol), worst <= tol});
  r.checks.push_back({format("against F(x) without the e^{x^2/4} factor, max = %.4f (x = %g)", worst_f, at_f),
                      worst_f <= tol, true});
}

void positivity(CriterionResult& r) {
  const LimitKernelSpec fb = FreeBoundary::half_line();
  Rng rng(20240601, 8);
  double k_min = kInf, c_min = kInf;
  for (int set = 0; set < 100; ++set) {
    std::vector<Cpx> pts(8);
    for (auto& p : pts) p = Cpx(-2 + 4 * rng.uniform(), -2 + 4 * rng.uniform());
    k_min = std::min(k_min, gram_min_eig(fb, pts, false));
    c_min = std::min(c_min, gram_min_eig(fb, pts, true));
  }
  const double tol = threshold("positivity.min_eig");
  r.checks.push_back({format("kernel min eigenvalue over 100 sets = %.3e >= %.0e", k_min, tol), k_min >= tol});
  r.checks.push_back({format("complementary min eigenvalue = %.3e >= %.0e", c_min, tol), c_min >= tol});
}

void tails(CriterionResult& r) {
  const LimitKernelSpec fb = FreeBoundary::half_line();
  const TailBounds ext = tail_bounds_report(fb, linspace_step(0, 3, 0.05));
  const TailBounds in = tail_bounds_report(fb, linspace_step(-3, 0, 0.05));
  const double te = threshold("tail.exterior"), ti = threshold("tail.interior");
  r.checks.push_back({format("sup_{[0,3]} F(2x) e^{2x^2} = %.4f <= %.1f", ext.exterior_sup, te), ext.exterior_sup <= te});
  r.checks.push_back({format("sup_{[-3,0]} |F(2x) - 1| e^{0.4x^2} = %.4f <= %.1f", in.interior_sup, ti),
                      in.interior_sup <= ti});
}

void inequalities(CriterionResult& r) {
  const InequalityResult q = inequality_suite(default_inequality_options());
  const double m = threshold("inequality.margin"), s = threshold("inequality.sharp");
  r.checks.push_back({format("F - F^2 - e^{-x^2}/4 min = %.3e >= %.0e", q.f_min, m), q.f_min >= m});
  r.checks.push_back({format("H bound min margin = %.3e >= %.0e", q.h_min, m), q.h_min >= m});
  r.checks.push_back({format("kernel bound min margin (200 pairs) = %.3e >= %.0e", q.ecu_min, m), q.ecu_min >= m});
  r.checks.push_back({format("sharpness: F margin at 0 = %.3e, H margin at 0 = %.3e, both <= %.0e", q.f_sharp, q.h_sharp, s),
                      std::abs(q.f_sharp) <= s && std::abs(q.h_sharp) <= s});
}

void sampler(CriterionResult& r) {
  const double sig = threshold("sampler.sigmas"), bias = threshold("sampler.bias");
  const HistogramSpec spec{-3.0, 1.0, 40};
  auto envelope = [&](const Histogram1D& h, const std::function<double(double)>& target, const char* name) {
    double worst = 0;
    int bad = 0;
    for (int b = 0; b < h.bins; ++b) {
      const double x = h.center(b);
      const double dev = std::abs(h.estimate[b] - target(x));
      const double allowed = sig * h.stderr_of_estimate[b] + bias;
      worst = std::max(worst, dev / allowed);
      if (dev > allowed) ++bad;
    }
    r.checks.push_back({format("%s: %d of %d bins outside 3 se + 0.02 (max dev/allowed = %.3f)", name, bad, h.bins, worst),
                        bad == 0});
  };

  SampleConfig g{Potential::ginibre(), 1024, 4000, 12345};
  const int saved = thread_count();
  set_thread_count(1);
  const Histogram1D h1 = boundary_profile(g, boundary_frame(g.pot, g.n), spec);
  set_thread_count(8);
  const Histogram1D h8 = boundary_profile(g, boundary_frame(g.pot, g.n), spec);
  set_thread_count(saved);
  envelope(h1, [](double x) { return plasma_F(2 * x); }, "ginibre vs F(2x)");
  const bool same = h1.counts == h8.counts && h1.estimate == h8.estimate &&
                    h1.stderr_of_estimate == h8.stderr_of_estimate && h1.total() == h8.total();
  r.checks.push_back({format("threads 1 and 8 give identical histograms: %s", same ? "yes" : "no"), same});

  SampleConfig he{Potential::hard_edge(), 1024, 4000, 12345};
  const Histogram1D hh = boundary_profile(he, boundary_frame(he.pot, he.n), spec);
  int outside_nonzero = 0;
  for (int b = 0; b < hh.bins; ++b)
    if (hh.center(b) > 0 && hh.counts[b] != 0) ++outside_nonzero;
  envelope(hh, [](double x) { return x < 0 ? hard_edge_H(2 * x).real() : 0.0; }, "hard edge vs H(2x)");
  r.checks.push_back({format("hard edge nonzero bins at x > 0: %d", outside_nonzero), outside_nonzero == 0});
}

void conditional(CriterionResult& r) {
  const double ts = threshold("conditional.self"), tb = threshold("conditional.bulk");
  const double b0 = std::abs(conditional_intensity(GinibreBulk{}, 0.0, 0.0));
  const double f0 = std::abs(conditional_intensity(FreeBoundary::half_line(), 0.0, 0.0));
  r.checks.push_back({format("R^(0)(0): bulk %.3e, free-boundary %.3e <= %.0e", b0, f0, ts), b0 <= ts && f0 <= ts});
  Rng rng(7, 12);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const Cpx z(-3 + 6 * rng.uniform(), -3 + 6 * rng.uniform());
    worst = std::max(worst, std::abs(conditional_intensity(GinibreBulk{}, 0.0, z) - (1 - std::exp(-std::norm(z)))));
  }
  r.checks.push_back({format("bulk profile vs 1 - e^{-|z|^2}, 100 points: max %.3e <= %.0e", worst, tb), worst <= tb});
}

struct Entry {
  const char* title;
  void (*run)(CriterionResult&);
};

const Entry kEntries[kCriterionCount] = {
    {"hard-edge plasma function at 0", hard_edge_H0},
    {"one-eighth formula", eighth},
    {"mass-one equations", mass_one},
    {"Ward residuals", ward},
    {"series identities", series},
    {"finite-n boundary convergence", finite_n},
    {"exponential sections", sections},
    {"Gram positivity", positivity},
    {"tail bounds", tails},
    {"kernel inequalities", inequalities},
    {"Monte Carlo boundary profiles", sampler},
    {"conditional intensity", conditional},
};

}  // namespace

bool CriterionResult::pass() const {
  bool any = false;
  for (const auto& c : checks) {
    if (c.informational) continue;
    any = true;
    if (!c.pass) return false;
  }
  return any;
}

std::string CriterionResult::summary() const {
  std::string s = format("C%02d %s %s", id, pass() ? "PASS" : "FAIL", title.c_str());
  for (const auto& c : checks) s += "\n    " + std::string(c.informational ? "[info] " : c.pass ? "[ok]   " : "[fail] ") + c.text;
  return s;
}

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriterionCount) throw DomainError("criterion id out of range");
  CriterionResult r;
  r.id = id;
  r.title = kEntries[id - 1].title;
  try {
    kEntries[id - 1].run(r);
  } catch (const std::exception& e) {
    r.checks.push_back({std::string("error: ") + e.what(), false});
  }
  return r;
}

}  // namespace plasma
