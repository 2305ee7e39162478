#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "plasma/errors.hpp"
#include "plasma/special.hpp"

using namespace plasma;

namespace {

std::vector<Cpx> random_points(int count, double radius, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-radius, radius);
  std::vector<Cpx> out;
  while (int(out.size()) < count) {
    const Cpx z(u(gen), u(gen));
    if (std::abs(z) < radius) out.push_back(z);
  }
  return out;
}

double rel(Cpx a, Cpx b) { return std::abs(a - b) / std::abs(b); }

Cpx to_cpx(oracle::cld z) { return Cpx(double(z.real()), double(z.imag())); }

}  // namespace

TEST_CASE("erfc at zero and odd symmetry of erf") {
  CHECK(std::abs(erfc_cpx(0.0) - 1.0) < 1e-16);
  CHECK(std::abs(erfc_cpx(-0.7) - (2.0 - erfc_cpx(0.7))) < 1e-15);
}

TEST_CASE("erfc(1) against tanh-sinh quadrature") {
  const auto q = oracle::exp_sinh([](oracle::ld t) { return std::exp(-t * t); }, 1.0L) * 2 / std::sqrt(oracle::kPiL);
  CHECK(rel(erfc_cpx(1.0), Cpx(double(q))) < 1e-12);
}

TEST_CASE("erfc relative accuracy on the right half of |z| <= 8") {
  for (const Cpx z0 : random_points(60, 8.0, 11)) {
    const Cpx z(std::abs(z0.real()), z0.imag());
    const Cpx ref = to_cpx(oracle::erfc_integral(oracle::cld(z.real(), z.imag())));
    INFO("z = " << z.real() << " + " << z.imag() << "i");
    CHECK(rel(erfc_cpx(z), ref) < 1e-12);
  }
}

TEST_CASE("erfc flags values outside |z| <= 30") {
  CHECK(erfc_checked(Cpx(3, 4)).in_envelope);
  CHECK_FALSE(erfc_checked(Cpx(40, 0)).in_envelope);
  CHECK(erfc_checked(Cpx(40, 0)).value == Cpx(0.0));
}

TEST_CASE("plasma function values") {
  CHECK(std::abs(plasma_F(Cpx(0.0)) - 0.5) < 1e-16);
  CHECK(std::abs(plasma_F(1.3) + plasma_F(-1.3) - 1.0) < 1e-15);
  const auto tail = oracle::exp_sinh([](oracle::ld t) { return std::exp(-t * t / 2) / std::sqrt(2 * oracle::kPiL); }, 2.0L);
  CHECK(std::abs(plasma_F(Cpx(2.0)).real() - double(tail)) < 1e-15);
}

TEST_CASE("plasma function equals the Gaussian convolution with the half line") {
  for (const Cpx z : random_points(10, 3.0, 5)) {
    const oracle::cld zz(z.real(), z.imag());
    auto f = [&](oracle::ld t) { return oracle::gauss(zz - t); };
    const Cpx ref = to_cpx(oracle::gauss_panels(f, -40.0L, 0.0L, 200));
    CHECK(std::abs(plasma_F(z) - ref) < 1e-12 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("Gaussian density") {
  CHECK(std::abs(gauss_gamma(Cpx(0.0)) - 1.0 / std::sqrt(2 * M_PI)) < 1e-16);
  CHECK(std::abs(gauss_gamma(Cpx(1, 1)) - gauss_gamma(Cpx(-1, -1))) < 1e-16);
  const double h = 1e-5;
  const Cpx fd = (gauss_gamma(Cpx(0.5 + h)) - gauss_gamma(Cpx(0.5 - h))) / (2 * h);
  CHECK(std::abs(fd + 0.5 * gauss_gamma(Cpx(0.5))) < 1e-9);
}

TEST_CASE("Gaussian convolved with interval indicators") {
  CHECK(conv_indicator(Cpx(0.3, 0.2), {-kInf, 0.0}) == plasma_F(Cpx(0.3, 0.2)));
  CHECK(std::abs(conv_indicator(Cpx(3, 2), {-kInf, kInf}) - 1.0) < 1e-16);
  const auto q = oracle::tanh_sinh([](oracle::ld t) { return std::exp(-t * t / 2) / std::sqrt(2 * oracle::kPiL); }, -1, 1);
  const Cpx v = conv_indicator(0.0, {-1.0, 1.0});
  CHECK(std::abs(v - (1.0 - 2.0 * plasma_F(1.0))) < 1e-15);
  CHECK(std::abs(v - double(q)) < 1e-14);
}

TEST_CASE("half-line indicator uses the same code path for any edge") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 50; ++i) {
    const double a = u(gen);
    const Cpx z(u(gen), u(gen));
    CHECK(conv_indicator(z, {-kInf, a}) == plasma_F(z - a));
  }
}

TEST_CASE("hard-edge plasma function at 0 is log 2") {
  CHECK(std::abs(hard_edge_H(0.0) - std::log(2.0)) < 1e-14);
  CHECK(std::abs(HardEdgePlasma::instance()(0.0) - std::log(2.0)) < 1e-14);
}

namespace {
// H(z) = int_{-inf}^0 gamma(z - t) / F(t) dt with many Gauss-Legendre panels
oracle::cld H_oracle(Cpx z) {
  const oracle::cld zz(z.real(), z.imag());
  auto f = [&](oracle::ld t) { return oracle::gauss(zz - t) / oracle::plasma_F(t); };
  return oracle::gauss_panels(f, zz.real() - 40.0L, 0.0L, 800);
}
}  // namespace

TEST_CASE("hard-edge plasma function deep inside tends to 1") {
  CHECK(std::abs(hard_edge_H(-8.0) - to_cpx(H_oracle(-8.0))) < 1e-12);
  CHECK(std::abs(hard_edge_H(-8.0) - 1.0) < 1e-6);
}

TEST_CASE("hard-edge plasma function against high-node quadrature for |z| <= 6") {
  for (const Cpx z : random_points(40, 6.0, 17)) {
    const Cpx ref = to_cpx(H_oracle(z));
    const double scale = std::max(1.0, std::exp(0.5 * z.imag() * z.imag()));
    INFO("z = " << z.real() << " + " << z.imag() << "i");
    CHECK(std::abs(hard_edge_H(z) - ref) < 1e-9 * scale);
    CHECK(std::abs(HardEdgePlasma::instance()(z) - ref) < 1e-9 * scale);
  }
}

TEST_CASE("hard-edge plasma function is real and positive on the line") {
  for (double x = -6; x <= 2; x += 0.1) {
    const Cpx h = hard_edge_H(x);
    CHECK(std::abs(h.imag()) <= 1e-15);
    CHECK(h.real() > 0);
  }
}

TEST_CASE("hard-edge derivatives match finite differences") {
  const auto& H = HardEdgePlasma::instance();
  for (double s = -4; s <= 1; s += 0.5) {
    const double h = 1e-3;
    const double d1 = (H(s + h).real() - H(s - h).real()) / (2 * h);
    const double d2 = (H(s + h).real() - 2 * H(s).real() + H(s - h).real()) / (h * h);
    CHECK(std::abs(H.derivative(1, s) - d1) < 1e-6);
    CHECK(std::abs(H.derivative(2, s) - d2) < 1e-5);
  }
}

TEST_CASE("Hermite polynomials") {
  CHECK(hermite_prob(0, Cpx(1.7, 2)) == Cpx(1.0));
  CHECK(hermite_prob(1, Cpx(1.7, 2)) == Cpx(1.7, 2));
  CHECK(hermite_prob(2, 2.0) == 3.0);
  const Cpx ref = to_cpx(oracle::rodrigues_hermite(5, 1.5L));
  CHECK(std::abs(hermite_prob(5, Cpx(1.5)) - ref) < 1e-12);
  CHECK(std::abs(hermite_prob(5, 1.5) - (std::pow(1.5, 5) - 10 * std::pow(1.5, 3) + 15 * 1.5)) < 1e-13);
  const Cpx z(0.4, -0.9);
  CHECK(rel(hermite_prob(9, z), to_cpx(oracle::rodrigues_hermite(9, oracle::cld(0.4L, -0.9L)))) < 1e-12);
  CHECK_THROWS_AS(hermite_prob(401, 1.0), DomainError);
}

TEST_CASE("scaled Hermite iteration matches h_k / sqrt(k!)") {
  ScaledHermite p(1.2);
  double fact = 1;
  for (int k = 0; k < 30; ++k) {
    if (k > 0) fact *= k;
    CHECK(p.index() == k);
    CHECK(p.value() == doctest::Approx(hermite_prob(k, 1.2) / std::sqrt(fact)).epsilon(1e-12));
    p.advance();
  }
}

TEST_CASE("Mittag-Leffler function") {
  CHECK(std::abs(mittag_leffler_M(1.0, 1.0) - M_E) < 1e-14);
  CHECK(std::abs(mittag_leffler_M(2.0, 0.0) - 2 / std::sqrt(M_PI)) < 1e-15);
  const Cpx a = mittag_leffler_partial(2.0, 1.7, 200), b = mittag_leffler_partial(2.0, 1.7, 400);
  CHECK(std::abs(a - b) < 1e-13 * std::abs(b));
  CHECK(std::abs(mittag_leffler_M(2.0, 1.7) - b) < 1e-13 * std::abs(b));
  CHECK(std::abs(mittag_leffler_M(1.0, Cpx(0.3, 2.0)) - std::exp(Cpx(0.3, 2.0))) < 1e-14);
}

TEST_CASE("Mittag-Leffler overflow is reported, scaled form stays finite") {
  CHECK_THROWS_AS(mittag_leffler_M(1.0, 800.0), OverflowError);
  const Cpx s = mittag_leffler_scaled(1.0, 800.0, 800.0);
  CHECK(std::abs(s - 1.0) < 1e-12);
}

TEST_CASE("lower incomplete gamma") {
  CHECK(lower_inc_gamma(1, 0.3) == doctest::Approx(1 - std::exp(-0.3)).epsilon(1e-14));
  CHECK(lower_inc_gamma(5, 200.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(lower_inc_gamma(3, 2.0) == doctest::Approx(2 - 10 * std::exp(-2.0)).epsilon(1e-13));
  // gamma(s, x) = (s-1)! P(Poisson(x) >= s)
  for (long s : {10L, 64L, 300L})
    for (double x : {5.0, 64.0, 250.0}) {
      const double ref_log = std::lgamma(double(s)) + std::log(double(1 - oracle::poisson_cdf(x, s - 1)));
      if (1 - oracle::poisson_cdf(x, s - 1) < 1e-300L) continue;
      CHECK(std::abs(log_lower_inc_gamma(s, x) - ref_log) < 1e-12 * std::max(1.0, std::abs(ref_log)));
    }
}

TEST_CASE("regularized gamma inverse round-trips") {
  for (double a : {0.5, 1.0, 2.5, 17.0, 1024.0})
    for (double p : {1e-12, 1e-3, 0.2, 0.5, 0.9, 1 - 1e-9}) {
      const double x = gamma_p_inv(a, p);
      CHECK(gamma_p(a, x) == doctest::Approx(p).epsilon(1e-10));
    }
}

TEST_CASE("Schwarz reflection") {
  for (const Cpx z : random_points(100, 4.0, 23)) {
    const Cpx zc = std::conj(z);
    CHECK(std::abs(erfc_cpx(zc) - std::conj(erfc_cpx(z))) <= 1e-12 * std::abs(erfc_cpx(z)));
    CHECK(std::abs(plasma_F(zc) - std::conj(plasma_F(z))) <= 1e-12 * std::abs(plasma_F(z)));
    CHECK(std::abs(hard_edge_H(zc) - std::conj(hard_edge_H(z))) <= 1e-12 * std::abs(hard_edge_H(z)));
    const Cpx m = mittag_leffler_M(2.5, z);
    CHECK(std::abs(mittag_leffler_M(2.5, zc) - std::conj(m)) <= 1e-12 * std::abs(m));
  }
}

TEST_CASE("Cauchy-Riemann residual") {
  const double h = 1e-4;
  const auto& H = HardEdgePlasma::instance();
  for (const Cpx z : random_points(50, 4.0, 29)) {
    auto cr = [&](auto f) {
      const Cpx dx = (f(z + h) - f(z - h)) / (2 * h);
      const Cpx dy = (f(z + Cpx(0, h)) - f(z - Cpx(0, h))) / (2 * h);
      return std::abs(dx + Cpx(0, 1) * dy) / std::max(1.0, std::abs(f(z)));
    };
    CHECK(cr([](Cpx u) { return plasma_F(u); }) < 1e-6);
    CHECK(cr([&](Cpx u) { return H(u); }) < 1e-6);
  }
}

TEST_CASE("heat-flow endpoint identities for F") {
  const double h = 1e-4;
  for (double s = -4; s <= 4; s += 0.25) {
    const double d1 = (plasma_F(s + h) - plasma_F(s - h)) / (2 * h);
    const double d2 = (plasma_F(s + h) - 2 * plasma_F(s) + plasma_F(s - h)) / (h * h);
    CHECK(std::abs(d1 + gauss_gamma(s)) < 1e-8);
    CHECK(std::abs(d2 - s * gauss_gamma(s)) < 1e-7);
    CHECK(std::abs(plasma_F_derivative(1, s) + gauss_gamma(s)) < 1e-16);
    CHECK(std::abs(plasma_F_derivative(2, s) - s * gauss_gamma(s)) < 1e-15);
  }
}
