#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "plasma/acceptance.hpp"
#include "plasma/errors.hpp"
#include "plasma/finite_n.hpp"
#include "plasma/limits.hpp"
#include "plasma/parallel.hpp"
#include "plasma/report.hpp"
#include "plasma/rng.hpp"
#include "plasma/sampler.hpp"
#include "plasma/special.hpp"
#include "plasma/thresholds.hpp"

namespace plasma::cli {

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// "x,y;x,y;..." or "x;..." for real points
std::vector<Cpx> parse_points(const std::string& text) {
  std::vector<Cpx> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    double re = 0, im = 0;
    char tail = 0;
    const int got = std::sscanf(item.c_str(), "%lf,%lf%c", &re, &im, &tail);
    if (got == 1 || got == 2) {
      out.emplace_back(re, got == 2 ? im : 0.0);
    } else {
      throw DomainError("bad point '" + item + "', expected x or x,y");
    }
  }
  if (out.empty()) throw DomainError("empty point list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw DomainError("bad integer '" + item + "'");
    }
    if (used != item.size() || v < 1) throw DomainError("bad integer '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty integer list");
  return out;
}

Json cpx_json(Cpx z) { return Json::array({z.real(), z.imag()}); }

std::string kind_key(const LimitKernelSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GinibreBulk>) return "ginibre_bulk";
        else if constexpr (std::is_same_v<T, FreeBoundary>) return "free_boundary";
        else if constexpr (std::is_same_v<T, HardEdge>) return "hard_edge";
        else return "mittag_leffler";
      },
      spec);
}

struct Output {
  std::string dir;
  std::string stem;

  void write(const std::string& csv, const Json& json) const {
    std::filesystem::create_directories(dir);
    if (!csv.empty()) write_text(dir + "/" + stem + ".csv", csv);
    write_text(dir + "/" + stem + ".json", json.dump(2) + "\n");
  }
};

struct Settings {
  std::string grid, spec, quad = "8,96,128", out = ".";
  double fd_step = 1e-3;
  std::uint64_t seed = 1;
};

// ---- eval ------------------------------------------------------------------

struct EvalArgs {
  Settings s;
  std::string limit, finite, frame = "boundary", w;
  int n = 1024;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  if (a.limit.empty() == a.finite.empty()) throw DomainError("eval needs exactly one of --limit or --finite");
  const GridSpec grid = parse_grid(a.s.grid.empty() ? "-3:3:0.1" : a.s.grid);
  const std::optional<Cpx> w = a.w.empty() ? std::nullopt : std::optional<Cpx>(parse_points(a.w).front());
  Json cfg;
  cfg["command"] = "eval";
  cfg["grid"] = a.s.grid.empty() ? "-3:3:0.1" : a.s.grid;
  if (w) cfg["w"] = cpx_json(*w);

  KernelGrid g;
  if (!a.limit.empty()) {
    const LimitKernelSpec spec = parse_limit_spec(a.limit);
    cfg["limit"] = to_string(spec);
    g = fill_grid(grid, [&](Cpx z) { return limit_kernel(spec, z, w ? *w : z); });
    g.meta["kernel"] = to_string(spec);
  } else {
    const Potential pot = parse_potential(a.finite);
    const RescaleFrame frame = make_frame(pot, a.n, parse_frame_kind(a.frame));
    const FiniteKernel K(pot, a.n);
    cfg["finite"] = to_string(pot);
    cfg["n"] = a.n;
    cfg["frame"] = a.frame;
    g = fill_grid(grid, [&](Cpx z) {
      const Cpx ww = w ? *w : z;
      return cocycle_fix(frame, z, ww) * rescaled_kernel(K, frame, z, ww);
    });
    g.meta["kernel"] = to_string(pot);
    g.meta["n"] = std::to_string(a.n);
    g.meta["frame"] = a.frame;
    g.meta["p"] = fmt17(frame.p.real()) + "," + fmt17(frame.p.imag());
    g.meta["theta"] = fmt17(frame.theta);
    g.meta["zoom"] = fmt17(frame.zoom);
  }
  g.meta["second_argument"] = w ? fmt17(w->real()) + "," + fmt17(w->imag()) : "diagonal";

  Json j;
  j["provenance"] = provenance(cfg, 0);
  j["grid"] = grid_json(g);
  Output{a.s.out, "eval"}.write(grid_csv(g), j);
  out << "eval: " << g.nx << "x" << g.ny << " values written to " << a.s.out << "/eval.csv\n";
  return kPass;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  Settings s;
  std::string equation, points = "random:8", z, w;
  bool complementary = false;
  int sets = 1, terms = 80;
  double a = 0.0;
};

std::vector<Cpx> default_mass_one_points(const LimitKernelSpec& spec) {
  if (std::holds_alternative<HardEdge>(spec)) return {-0.5, Cpx(-1, -1)};
  if (std::holds_alternative<MittagLeffler>(spec)) return {0.0, 0.5, Cpx(1, 0.5)};
  return {0.0, 1.0, Cpx(-1, 1), -2.0};
}

int finish(bool pass, std::ostream& out, const std::string& line) {
  out << line << (pass ? "  PASS\n" : "  FAIL\n");
  return pass ? kPass : kFail;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const std::string& eq = a.equation;
  const LimitKernelSpec spec = parse_limit_spec(a.s.spec.empty() ? "free-boundary" : a.s.spec);
  const QuadratureConfig quad = parse_quad(a.s.quad);
  Json cfg;
  cfg["command"] = "verify";
  cfg["equation"] = eq;
  const Output sink{a.s.out, "verify-" + eq};

  if (eq == "ward") {
    WardOptions opt;
    opt.quad = quad;
    opt.fd_step = a.s.fd_step;
    std::string grid = a.s.grid;
    if (std::holds_alternative<HardEdge>(spec)) {
      if (grid.empty()) grid = "-2:-0.2:0.3,-1:1";
    } else if (std::holds_alternative<MittagLeffler>(spec)) {
      if (grid.empty()) grid = "-1.5:1.5:0.25";
      opt.disc_radius = 1.5;
      opt.puncture_origin = true;
    } else if (grid.empty()) {
      grid = "-2:2:0.5";
    }
    opt.grid = parse_grid(grid);
    const double tol = threshold("ward." + kind_key(spec));
    cfg.update({{"spec", to_string(spec)}, {"grid", grid}, {"quad", a.s.quad}, {"fd_step", a.s.fd_step}});
    const ResidualReport rep = ward_residual(spec, opt);
    Json j;
    j["provenance"] = provenance(cfg, 0);
    j["report"] = residual_json(rep);
    j["threshold"] = tol;
    sink.write(residual_csv(rep), j);
    return finish(rep.sup_norm <= tol, out,
                  "ward " + to_string(spec) + ": sup " + fmt("%.3e", rep.sup_norm) + " threshold " + fmt("%.0e", tol));
  }

  if (eq == "mass-one") {
    const std::vector<Cpx> pts = a.z.empty() ? default_mass_one_points(spec) : parse_points(a.z);
    const double tol = threshold("mass_one." + kind_key(spec));
    cfg.update({{"spec", to_string(spec)}, {"quad", a.s.quad}});
    ResidualReport rep;
    Json rows = Json::array();
    for (const Cpx z : pts) {
      const double r = mass_one_residual(spec, z, quad);
      rep.points.push_back(z);
      rep.values.push_back(r);
      rep.residuals.push_back(std::abs(r));
      rows.push_back({{"z", cpx_json(z)}, {"residual", r}});
      out << "  z = " << fmt17(z.real()) << "," << fmt17(z.imag()) << "  residual " << fmt("%.3e", r) << "\n";
    }
    rep.finalize();
    cfg["points"] = rows;
    Json j;
    j["provenance"] = provenance(cfg, 0);
    j["report"] = residual_json(rep);
    j["threshold"] = tol;
    sink.write(residual_csv(rep), j);
    return finish(rep.sup_norm <= tol, out, "mass-one " + to_string(spec) + ": max " + fmt("%.3e", rep.sup_norm));
  }

  if (eq == "series") {
    const double tol = threshold("series.residual");
    cfg["terms"] = a.terms;
    ResidualReport rep;
    double m1 = 0, hid = 0;
    for (int i = 0; i <= 32; ++i) {
      const double x = -4.0 + 0.25 * i;
      const double r1 = mass_one_series_residual(x, a.terms), r2 = hermite_identity_residual(x, a.terms);
      m1 = std::max(m1, std::abs(r1));
      hid = std::max(hid, std::abs(r2));
      rep.points.push_back(x);
      rep.values.push_back(Cpx(r1, r2));
      rep.residuals.push_back(std::max(std::abs(r1), std::abs(r2)));
    }
    const double tele = telescoping_residual(1.2, a.terms);
    rep.finalize();
    out << "  mass-one series max " << fmt("%.3e", m1) << ", Hermite identity max " << fmt("%.3e", hid)
        << ", telescoping " << fmt("%.3e", tele) << "\n";
    Json j;
    j["provenance"] = provenance(cfg, 0);
    j["report"] = residual_json(rep);
    j["telescoping"] = tele;
    j["threshold"] = tol;
    sink.write(residual_csv(rep), j);
    return finish(rep.sup_norm <= tol && std::abs(tele) <= tol, out, "series N = " + std::to_string(a.terms));
  }

  if (eq == "eighth") {
    const double tol = threshold("eighth.value");
    const double v = eighth_formula({}, a.a);
    cfg["a"] = a.a;
    Json j;
    j["provenance"] = provenance(cfg, 0);
    j["value"] = v;
    j["threshold"] = tol;
    sink.write("", j);
    return finish(std::abs(v - 0.125) <= tol, out, "eighth: " + fmt("%.15f", v));
  }

  if (eq == "inequalities") {
    InequalityOptions opt = default_inequality_options();
    opt.seed = a.s.seed;
    cfg["seed"] = a.s.seed;
    const InequalityResult r = inequality_suite(opt);
    const double m = threshold("inequality.margin"), sharp = threshold("inequality.sharp");
    out << "  F min " << fmt("%.3e", r.f_min) << ", H min " << fmt("%.3e", r.h_min) << ", kernel bound min "
        << fmt("%.3e", r.ecu_min) << ", sharp " << fmt("%.3e", r.f_sharp) << " / " << fmt("%.3e", r.h_sharp) << "\n";
    Json j;
    j["provenance"] = provenance(cfg, a.s.seed);
    j["f_min"] = r.f_min;
    j["h_min"] = r.h_min;
    j["ecu_min"] = r.ecu_min;
    j["f_sharp"] = r.f_sharp;
    j["h_sharp"] = r.h_sharp;
    sink.write(residual_csv(r.report), j);
    const bool pass = r.f_min >= m && r.h_min >= m && r.ecu_min >= m && std::abs(r.f_sharp) <= sharp &&
                      std::abs(r.h_sharp) <= sharp;
    return finish(pass, out, "inequalities");
  }

  if (eq == "positivity") {
    int count = 8;
    if (a.points.rfind("random:", 0) == 0) {
      count = parse_int_list(a.points.substr(7)).front();
    } else {
      throw DomainError("--points must look like random:K");
    }
    const double tol = threshold("positivity.min_eig");
    cfg.update({{"spec", to_string(spec)}, {"points", count}, {"sets", a.sets}, {"complementary", a.complementary},
                {"seed", a.s.seed}});
    Rng rng(a.s.seed, 0);
    double worst = kInf;
    for (int s = 0; s < a.sets; ++s) {
      std::vector<Cpx> pts(count);
      for (auto& p : pts) p = Cpx(-2 + 4 * rng.uniform(), -2 + 4 * rng.uniform());
      worst = std::min(worst, gram_min_eig(spec, pts, a.complementary));
    }
    Json j;
    j["provenance"] = provenance(cfg, a.s.seed);
    j["min_eigenvalue"] = worst;
    j["threshold"] = tol;
    sink.write("", j);
    return finish(worst >= tol, out, std::string(a.complementary ? "complementary " : "") + "Gram min eigenvalue " +
                                         fmt("%.3e", worst));
  }

  if (eq == "polarized") {
    const bool hard = std::holds_alternative<HardEdge>(spec);
    const Cpx z = a.z.empty() ? (hard ? Cpx(-0.5) : Cpx(0.2)) : parse_points(a.z).front();
    const Cpx w = a.w.empty() ? (hard ? Cpx(-1, -0.5) : Cpx(-0.3, 0.4)) : parse_points(a.w).front();
    const double tol = threshold("polarized." + kind_key(spec));
    cfg.update({{"spec", to_string(spec)}, {"z", cpx_json(z)}, {"w", cpx_json(w)}, {"quad", a.s.quad}});
    const Cpx r = polarized_mass_one_residual(spec, z, w, quad);
    Json j;
    j["provenance"] = provenance(cfg, 0);
    j["residual"] = cpx_json(r);
    j["threshold"] = tol;
    sink.write("", j);
    return finish(std::abs(r) <= tol, out, "polarized " + to_string(spec) + ": |residual| " + fmt("%.3e", std::abs(r)));
  }

  throw DomainError("unknown equation '" + eq + "'");
}

// ---- converge --------------------------------------------------------------

struct ConvergeArgs {
  Settings s;
  std::string potential = "ginibre", frame = "boundary", n_list;
  bool sections = false;
};

int cmd_converge(const ConvergeArgs& a, std::ostream& out) {
  Json cfg;
  cfg["command"] = "converge";
  Json table = Json::array();
  std::string csv;
  if (a.sections) {
    const std::vector<int> ns = parse_int_list(a.n_list.empty() ? "256,4096" : a.n_list);
    cfg["n_list"] = ns;
    cfg["mode"] = "sections";
    csv = "n,x,section,target_exp_factor,target_F\n";
    out << "       n       x       section   e^{x^2/4}F(x)          F(x)\n";
    for (const int n : ns)
      for (int i = 0; i <= 8; ++i) {
        const double x = -2.0 + 0.5 * i;
        const double s = exp_section(n, x), t1 = std::exp(0.25 * x * x) * plasma_F(x), t2 = plasma_F(x);
        csv += std::to_string(n) + "," + fmt17(x) + "," + fmt17(s) + "," + fmt17(t1) + "," + fmt17(t2) + "\n";
        table.push_back({{"n", n}, {"x", x}, {"section", s}, {"target_exp_factor", t1}, {"target_F", t2}});
        char line[128];
        std::snprintf(line, sizeof line, "%8d %7.2f %13.6f %15.6f %13.6f\n", n, x, s, t1, t2);
        out << line;
      }
  } else {
    const Potential pot = parse_potential(a.potential);
    const FrameKind kind = parse_frame_kind(a.frame);
    std::string spec_text = a.s.spec;
    if (spec_text.empty()) {
      if (kind == FrameKind::Bulk) spec_text = "ginibre-bulk";
      else if (kind == FrameKind::Singularity) spec_text = "mittag-leffler:" + fmt17(pot.lambda);
      else spec_text = pot.kind == Potential::Kind::HardEdgeGinibre ? "hard-edge" : "free-boundary";
    }
    const LimitKernelSpec spec = parse_limit_spec(spec_text);
    const std::string grid_text = a.s.grid.empty() ? "-3:3:0.25,-1:1" : a.s.grid;
    const GridSpec grid = parse_grid(grid_text);
    const std::vector<int> ns = parse_int_list(a.n_list.empty() ? "64,256,1024" : a.n_list);
    cfg.update({{"potential", to_string(pot)}, {"frame", a.frame}, {"spec", to_string(spec)}, {"grid", grid_text},
                {"n_list", ns}});
    const std::vector<Cpx> pts = grid.points();
    csv = "n,sup_error\n";
    out << "       n     sup error\n";
    double previous = 0;
    for (const int n : ns) {
      const FiniteKernel K(pot, n);
      const RescaleFrame frame = make_frame(pot, n, kind);
      std::vector<double> err(pts.size());
      parallel_for(pts.size(), [&](std::size_t i) {
        const Cpx z = pts[i];
        double e = 0;
        for (const Cpx w : {z, Cpx(0.0)}) {
          if (std::holds_alternative<HardEdge>(spec) && (z.real() >= 0 || w.real() >= 0)) continue;
          e = std::max(e, std::abs(cocycle_fix(frame, z, w) * rescaled_kernel(K, frame, z, w) - limit_kernel(spec, z, w)));
        }
        err[i] = e;
      });
      const double sup = *std::max_element(err.begin(), err.end());
      csv += std::to_string(n) + "," + fmt17(sup) + "\n";
      Json row = {{"n", n}, {"sup_error", sup}};
      if (previous > 0) row["ratio_to_previous"] = previous / sup;
      table.push_back(row);
      char line[96];
      std::snprintf(line, sizeof line, "%8d %13.6e\n", n, sup);
      out << line;
      previous = sup;
    }
  }
  Json j;
  j["provenance"] = provenance(cfg, 0);
  j["table"] = table;
  Output{a.s.out, "converge"}.write(csv, j);
  return kPass;
}

// ---- sample ----------------------------------------------------------------

struct SampleArgs {
  Settings s;
  std::string potential = "ginibre", frame = "boundary", range, method = "variate";
  int n = 1024, bins = 0;
  long trials = 4000;
};

int cmd_sample(const SampleArgs& a, std::ostream& out) {
  SampleConfig cfg{parse_potential(a.potential), a.n, a.trials, a.s.seed};
  const FrameKind kind = parse_frame_kind(a.frame);
  if (kind == FrameKind::Bulk) throw DomainError("sample supports --frame boundary or singularity");
  if (a.method != "variate" && a.method != "inverse-cdf") throw DomainError("--method is variate or inverse-cdf");
  const RadialMethod method = a.method == "variate" ? RadialMethod::Variate : RadialMethod::InverseCdf;

  HistogramSpec hs = kind == FrameKind::Boundary ? HistogramSpec{-3.0, 1.0, 40} : HistogramSpec{0.0, 4.0, 40};
  if (!a.range.empty()) {
    char tail = 0;
    if (std::sscanf(a.range.c_str(), "%lf:%lf%c", &hs.lo, &hs.hi, &tail) != 2) throw DomainError("--range is lo:hi");
    hs.bins = std::max(1, int(std::lround((hs.hi - hs.lo) / 0.1)));
  }
  if (a.bins > 0) hs.bins = a.bins;

  Histogram1D h;
  std::function<double(double)> target;
  if (kind == FrameKind::Boundary) {
    h = boundary_profile(cfg, boundary_frame(cfg.pot, cfg.n), hs, method);
    if (cfg.pot.kind == Potential::Kind::HardEdgeGinibre) {
      target = [](double x) { return x < 0 ? hard_edge_H(2 * x).real() : 0.0; };
    } else {
      target = [](double x) { return plasma_F(2 * x); };
    }
  } else {
    h = bulk_singularity_profile(cfg, hs);
    const LimitKernelSpec ml = MittagLeffler{cfg.pot.lambda};
    target = [ml](double s) { return one_point(ml, s); };
  }

  const double sig = threshold("sampler.sigmas"), bias = threshold("sampler.bias");
  int outside = 0;
  double worst = 0;
  std::string csv = "bin_center,estimate,stderr,target\n";
  for (int b = 0; b < h.bins; ++b) {
    const double x = h.center(b), t = target(x);
    const double dev = std::abs(h.estimate[b] - t), allowed = sig * h.stderr_of_estimate[b] + bias;
    worst = std::max(worst, dev / allowed);
    if (dev > allowed) ++outside;
    csv += fmt17(x) + "," + fmt17(h.estimate[b]) + "," + fmt17(h.stderr_of_estimate[b]) + "," + fmt17(t) + "\n";
  }
  Json c;
  c.update({{"command", "sample"}, {"potential", to_string(cfg.pot)}, {"n", cfg.n}, {"trials", cfg.trials},
            {"frame", a.frame}, {"lo", hs.lo}, {"hi", hs.hi}, {"bins", hs.bins}, {"method", a.method}});
  Json j;
  j["provenance"] = provenance(c, cfg.seed);
  j["histogram"] = histogram_json(h);
  j["bins_outside_envelope"] = outside;
  j["max_deviation_over_allowed"] = worst;
  Output{a.s.out, "sample"}.write(csv, j);
  out << "sample: " << outside << " of " << h.bins << " bins outside " << fmt("%.0f", sig) << " se + "
      << fmt("%.2f", bias) << " (max deviation/allowed " << fmt("%.3f", worst) << ")\n";
  return outside == 0 ? kPass : kFail;
}

// ---- acceptance ------------------------------------------------------------

int cmd_acceptance(const std::vector<int>& only, std::ostream& out) {
  std::vector<int> ids = only;
  if (ids.empty())
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  int failed = 0;
  for (const int id : ids) {
    const CriterionResult r = run_criterion(id);
    out << r.summary() << "\n" << std::flush;
    if (!r.pass()) ++failed;
  }
  out << (failed ? std::to_string(failed) + " of " + std::to_string(ids.size()) + " criteria failed\n"
                 : "all " + std::to_string(ids.size()) + " criteria passed\n");
  return failed ? kFail : kPass;
}

void show_thresholds(std::ostream& out) {
  out << "thresholds version " << kThresholdsVersion << "\n";
  for (const auto& t : thresholds()) {
    char line[256];
    std::snprintf(line, sizeof line, "%-28s %-10.3g %s\n", t.key, t.value, t.meaning);
    out << line;
  }
}

void add_settings(CLI::App* cmd, Settings& s, bool spec, bool grid, bool quad, bool seed) {
  if (grid) cmd->add_option("--grid", s.grid, "a:b:step[,c:d]");
  if (spec) cmd->add_option("--spec", s.spec, "limit kernel spec");
  if (quad) {
    cmd->add_option("--quad", s.quad, "r_max,nr,na")->capture_default_str();
    cmd->add_option("--fd-step", s.fd_step, "finite-difference step")->capture_default_str();
  }
  if (seed) cmd->add_option("--seed", s.seed, "random seed")->capture_default_str();
  cmd->add_option("--out", s.out, "output directory")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Correlation kernels of random normal matrix ensembles: evaluation and verification"};
  app.set_config("--config", "", "TOML file with option values; explicit flags win");
  app.allow_config_extras(false);
  app.require_subcommand(0, 1);
  int threads = 0;
  bool show = false;
  app.add_option("--threads", threads, "worker cap (PLASMA_KERNEL_THREADS when unset)");
  app.add_flag("--show-thresholds", show, "print the acceptance thresholds and exit");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluate a kernel on a grid");
  add_settings(eval, ea.s, false, true, false, false);
  eval->add_option("--limit", ea.limit, "limit kernel spec");
  eval->add_option("--finite", ea.finite, "potential: ginibre | power:lambda | hard-edge");
  eval->add_option("--n", ea.n, "matrix size")->capture_default_str();
  eval->add_option("--frame", ea.frame, "bulk | boundary | singularity")->capture_default_str();
  eval->add_option("--w", ea.w, "fixed second argument x,y (default: diagonal)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check an identity and report residuals");
  verify->add_option("equation", va.equation, "ward | mass-one | series | eighth | inequalities | positivity | polarized")
      ->required()
      ->check(CLI::IsMember({"ward", "mass-one", "series", "eighth", "inequalities", "positivity", "polarized"}));
  add_settings(verify, va.s, true, true, true, true);
  verify->add_option("--points", va.points, "random:K for positivity")->capture_default_str();
  verify->add_option("--sets", va.sets, "point sets for positivity")->capture_default_str();
  verify->add_flag("--complementary", va.complementary, "use G (1 - Psi)");
  verify->add_option("--z", va.z, "points x,y;x,y");
  verify->add_option("--w", va.w, "second point x,y");
  verify->add_option("--terms", va.terms, "series truncation")->capture_default_str();
  verify->add_option("--a", va.a, "edge offset for the eighth formula")->capture_default_str();

  ConvergeArgs ca;
  auto* converge = app.add_subcommand("converge", "finite-n versus limit tables");
  add_settings(converge, ca.s, true, true, false, false);
  converge->add_option("--potential", ca.potential)->capture_default_str();
  converge->add_option("--frame", ca.frame, "bulk | boundary | singularity")->capture_default_str();
  converge->add_option("--n", ca.n_list, "comma-separated sizes");
  converge->add_flag("--sections", ca.sections, "exponential sections table");

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "Monte Carlo radial profiles");
  add_settings(sample, sa.s, false, false, false, true);
  sample->add_option("--potential", sa.potential)->capture_default_str();
  sample->add_option("--n", sa.n)->capture_default_str();
  sample->add_option("--trials", sa.trials)->capture_default_str();
  sample->add_option("--frame", sa.frame, "boundary | singularity")->capture_default_str();
  sample->add_option("--bins", sa.bins, "bin count (default: width 0.1)");
  sample->add_option("--range", sa.range, "lo:hi");
  sample->add_option("--method", sa.method, "variate | inverse-cdf")->capture_default_str();

  std::vector<int> only;
  auto* acceptance = app.add_subcommand("acceptance", "run the acceptance criteria");
  acceptance->add_option("--only", only, "criterion ids")->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (threads > 0) set_thread_count(threads);
    if (show) {
      show_thresholds(out);
      return kPass;
    }
    if (*eval) return cmd_eval(ea, out);
    if (*verify) return cmd_verify(va, out);
    if (*converge) return cmd_converge(ca, out);
    if (*sample) return cmd_sample(sa, out);
    if (*acceptance) return cmd_acceptance(only, out);
    out << app.help();
    return kUsage;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNonConvergence;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace plasma::cli
