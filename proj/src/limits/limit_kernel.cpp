#include <cmath>
#include <cstdio>
#include <string>

#include "plasma/errors.hpp"
#include "plasma/limits.hpp"
#include "plasma/special.hpp"

namespace plasma {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<double> parse_numbers(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find(',', start);
    const std::string piece(text.substr(start, end == std::string_view::npos ? text.npos : end - start));
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != piece.size()) throw DomainError("not a number: '" + piece + "'");
    out.push_back(v);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// exp(L) F(u - c) with the conventions F(-inf) = 1, F(+inf) = 0
Cpx weighted_shifted_F(Cpx L, Cpx u, double c) {
  if (std::isinf(c)) return c > 0 ? std::exp(L) : Cpx(0.0);
  return weighted_F(L, u - c);
}

// exp(L) Phi(u)
Cpx weighted_symbol(const FreeBoundary& fb, Cpx L, Cpx u) {
  Cpx acc = 0.0;
  for (const auto& t : fb.terms)
    acc += t.weight * (weighted_shifted_F(L, u, t.interval.hi) - weighted_shifted_F(L, u, t.interval.lo));
  return acc;
}

Cpx log_G(Cpx z, Cpx w) { return z * std::conj(w) - 0.5 * (std::norm(z) + std::norm(w)); }

Cpx mittag_leffler_kernel(double lambda, Cpx z, Cpx w) {
  const double az = std::pow(std::norm(z), 0.5 * lambda);  // |z|^lambda
  const double aw = std::pow(std::norm(w), 0.5 * lambda);
  // |M(z conj w)| e^{-shift} <= poly * exp(-(|z|^l - |w|^l)^2 / 2)
  if (0.5 * (az - aw) * (az - aw) > 760.0) return 0.0;
  return mittag_leffler_scaled(lambda, z * std::conj(w), 0.5 * (az * az + aw * aw));
}

double ml_one_point(double lambda, Cpx z) {
  const double r2 = std::norm(z);
  return mittag_leffler_scaled(lambda, r2, std::pow(r2, lambda)).real();
}

double F_derivative_at(int order, double s) {
  if (std::isinf(s)) return order == 0 ? (s < 0 ? 1.0 : 0.0) : 0.0;
  return plasma_F_derivative(order, s);
}

}  // namespace

std::string to_string(const LimitKernelSpec& spec) {
  return std::visit(
      overloaded{[](const GinibreBulk&) -> std::string { return "ginibre-bulk"; },
                 [](const HardEdge&) -> std::string { return "hard-edge"; },
                 [](const MittagLeffler& m) -> std::string { return "mittag-leffler:" + num(m.lambda); },
                 [](const FreeBoundary& fb) -> std::string {
                   if (fb.terms.size() == 1 && fb.terms[0].weight == 1.0 && std::isinf(fb.terms[0].interval.lo) &&
                       fb.terms[0].interval.hi == 0.0)
                     return "free-boundary";
                   if (fb.terms.size() == 1 && std::isinf(fb.terms[0].interval.lo) &&
                       std::isinf(fb.terms[0].interval.hi))
                     return "constant:" + num(fb.terms[0].weight);
                   std::string out = "free-boundary:";
                   for (std::size_t i = 0; i < fb.terms.size(); ++i) {
                     if (i) out += ",";
                     out += num(fb.terms[i].interval.lo) + "," + num(fb.terms[i].interval.hi);
                   }
                   return out;
                 }},
      spec);
}

LimitKernelSpec parse_limit_spec(std::string_view text) {
  if (text == "ginibre-bulk" || text == "bulk") return GinibreBulk{};
  if (text == "hard-edge") return HardEdge{};
  if (text == "free-boundary") return FreeBoundary::half_line();
  if (text.substr(0, 14) == "free-boundary:") {
    const auto v = parse_numbers(text.substr(14));
    if (v.size() == 1) return FreeBoundary::half_line(v[0]);
    if (v.size() % 2 != 0) throw DomainError("free-boundary intervals need lo,hi pairs");
    FreeBoundary fb;
    for (std::size_t i = 0; i < v.size(); i += 2) {
      const IntervalR I{v[i], v[i + 1]};
      if (!I.valid()) throw DomainError("free-boundary interval with lo >= hi");
      fb.terms.push_back({1.0, I});
    }
    return fb;
  }
  if (text.substr(0, 9) == "constant:") {
    const auto v = parse_numbers(text.substr(9));
    if (v.size() != 1) throw DomainError("constant:<c> takes one number");
    return FreeBoundary::constant(v[0]);
  }
  if (text.substr(0, 15) == "mittag-leffler:") {
    const auto v = parse_numbers(text.substr(15));
    if (v.size() != 1 || !(v[0] >= 1.0 && v[0] <= 10.0)) throw DomainError("mittag-leffler:<lambda> needs lambda in [1, 10]");
    return MittagLeffler{v[0]};
  }
  throw DomainError("unknown kernel spec '" + std::string(text) +
                    "' (ginibre-bulk, free-boundary[:...], constant:c, hard-edge, mittag-leffler:l)");
}

Cpx symbol_value(const FreeBoundary& fb, Cpx u) { return weighted_symbol(fb, 0.0, u); }

double symbol_derivative(const FreeBoundary& fb, int order, double s) {
  double acc = 0.0;
  for (const auto& t : fb.terms)
    acc += t.weight * (F_derivative_at(order, s - t.interval.hi) - F_derivative_at(order, s - t.interval.lo));
  return acc;
}

Cpx ginibre_G(Cpx z, Cpx w) { return std::exp(log_G(z, w)); }

Cpx limit_kernel(const LimitKernelSpec& spec, Cpx z, Cpx w) {
  return std::visit(
      overloaded{[&](const GinibreBulk&) { return ginibre_G(z, w); },
                 [&](const FreeBoundary& fb) { return weighted_symbol(fb, log_G(z, w), z + std::conj(w)); },
                 [&](const HardEdge&) {
                   if (!(z.real() < 0.0 && w.real() < 0.0)) return Cpx(0.0);
                   return HardEdgePlasma::instance().weighted(log_G(z, w), z + std::conj(w));
                 },
                 [&](const MittagLeffler& m) { return mittag_leffler_kernel(m.lambda, z, w); }},
      spec);
}

Cpx complementary_kernel(const LimitKernelSpec& spec, Cpx z, Cpx w) {
  if (std::holds_alternative<GinibreBulk>(spec)) return 0.0;
  if (const auto* fb = std::get_if<FreeBoundary>(&spec)) {
    const Cpx L = log_G(z, w);
    return std::exp(L) - weighted_symbol(*fb, L, z + std::conj(w));
  }
  throw DomainError("complementary kernel needs a translation-invariant spec with symbol Phi");
}

double one_point(const LimitKernelSpec& spec, Cpx z) {
  return std::visit(
      overloaded{[&](const GinibreBulk&) { return 1.0; },
                 [&](const FreeBoundary& fb) { return symbol_value(fb, 2.0 * z.real()).real(); },
                 [&](const HardEdge&) {
                   if (!(z.real() < 0.0)) return 0.0;
                   return HardEdgePlasma::instance()(2.0 * z.real()).real();
                 },
                 [&](const MittagLeffler& m) { return ml_one_point(m.lambda, z); }},
      spec);
}

double berezin(const LimitKernelSpec& spec, Cpx z, Cpx w) {
  const double R = one_point(spec, z);
  if (!(R >= 1e-300)) throw ZeroIntensity("one-point function vanishes at the conditioning point");
  return std::norm(limit_kernel(spec, z, w)) / R;
}

double conditional_intensity(const LimitKernelSpec& spec, Cpx a, Cpx z) {
  return one_point(spec, z) - berezin(spec, a, z);
}

double laplacian_log_R(const LimitKernelSpec& spec, Cpx z) {
  const double s = 2.0 * z.real();
  return std::visit(
      overloaded{[&](const GinibreBulk&) { return 0.0; },
                 [&](const FreeBoundary& fb) {
                   const double p0 = symbol_derivative(fb, 0, s), p1 = symbol_derivative(fb, 1, s),
                                p2 = symbol_derivative(fb, 2, s);
                   return p2 / p0 - (p1 / p0) * (p1 / p0);
                 },
                 [&](const HardEdge&) {
                   const auto& H = HardEdgePlasma::instance();
                   const double h0 = H.derivative(0, s), h1 = H.derivative(1, s), h2 = H.derivative(2, s);
                   return h2 / h0 - (h1 / h0) * (h1 / h0);
                 },
                 [&](const MittagLeffler& m) {
                   constexpr double h = 1e-3;
                   auto f = [&](Cpx p) { return std::log(ml_one_point(m.lambda, p)); };
                   auto second = [&](Cpx e) {
                     return (-f(z + 2.0 * h * e) + 16.0 * f(z + h * e) - 30.0 * f(z) + 16.0 * f(z - h * e) -
                             f(z - 2.0 * h * e)) /
                            (12.0 * h * h);
                   };
                   return 0.25 * (second(Cpx(1, 0)) + second(Cpx(0, 1)));
                 }},
      spec);
}

double ward_rhs(const LimitKernelSpec& spec, Cpx z) {
  double dq = 1.0;
  if (const auto* m = std::get_if<MittagLeffler>(&spec))
    dq = m->lambda * m->lambda * std::pow(std::norm(z), m->lambda - 1.0);
  return one_point(spec, z) - dq - laplacian_log_R(spec, z);
}

}  // namespace plasma
