#include "plasma/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "plasma/thresholds.hpp"

namespace plasma {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json provenance(const Json& config, std::uint64_t seed) {
  Json p;
  p["version"] = kVersion;
  p["thresholds_version"] = kThresholdsVersion;
  p["config_hash"] = hex64(fnv1a64(config.dump()));
  p["seed"] = seed;
  p["config"] = config;
  return p;
}

std::string grid_csv(const KernelGrid& g) {
  std::string out = "re_z,im_z,re_val,im_val\n";
  for (int iy = 0; iy < g.ny; ++iy)
    for (int ix = 0; ix < g.nx; ++ix) {
      const Cpx z = g.point(ix, iy), v = g.at(ix, iy);
      out += fmt17(z.real()) + ',' + fmt17(z.imag()) + ',' + fmt17(v.real()) + ',' + fmt17(v.imag()) + '\n';
    }
  return out;
}

std::string residual_csv(const ResidualReport& r) {
  std::string out = "x,y,residual\n";
  for (std::size_t i = 0; i < r.points.size(); ++i)
    out += fmt17(r.points[i].real()) + ',' + fmt17(r.points[i].imag()) + ',' + fmt17(r.residuals[i]) + '\n';
  return out;
}

std::string histogram_csv(const Histogram1D& h) {
  std::string out = "bin_center,estimate,stderr\n";
  for (int b = 0; b < h.bins; ++b)
    out += fmt17(h.center(b)) + ',' + fmt17(h.estimate[b]) + ',' + fmt17(h.stderr_of_estimate[b]) + '\n';
  return out;
}

Json grid_json(const KernelGrid& g) {
  Json j;
  j["origin"] = {g.origin.real(), g.origin.imag()};
  j["step"] = g.step;
  j["nx"] = g.nx;
  j["ny"] = g.ny;
  j["meta"] = g.meta;
  return j;
}

Json residual_json(const ResidualReport& r) {
  Json j;
  j["sup_norm"] = r.sup_norm;
  j["l2_norm"] = r.l2_norm;
  j["points"] = r.points.size();
  j["params"] = r.params;
  return j;
}

Json histogram_json(const Histogram1D& h) {
  Json j;
  j["lo"] = h.lo;
  j["hi"] = h.hi;
  j["bins"] = h.bins;
  j["trials"] = h.trials;
  j["normalization"] =
      h.normalization == Histogram1D::Normalization::RescaledIntensity ? "rescaled-intensity" : "density-per-unit-length";
  j["counts"] = h.counts;
  j["underflow"] = h.underflow;
  j["overflow"] = h.overflow;
  return j;
}

void write_text(const std::string& path, std::string_view text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f.write(text.data(), std::streamsize(text.size()));
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace plasma
