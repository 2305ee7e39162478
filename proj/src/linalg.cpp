#include "plasma/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "plasma/errors.hpp"

namespace plasma {

double hermitian_asymmetry(const CMatrix& m) {
  double worst = 0.0;
  for (int i = 0; i < m.n; ++i)
    for (int j = i; j < m.n; ++j) worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
  if (hermitian_asymmetry(m) > 1e-10) throw NonHermitianInput("matrix is not Hermitian within 1e-10");
  const int n = m.n, N = 2 * n;
  std::vector<double> a(std::size_t(N) * N);
  auto A = [&](int i, int j) -> double& { return a[std::size_t(i) * N + j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Cpx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      A(i, j) = A(i + n, j + n) = v.real();
      A(i + n, j) = v.imag();
      A(i, j + n) = -v.imag();
    }

  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < N; ++p)
      for (int q = p + 1; q < N; ++q) off = std::max(off, std::abs(A(p, q)));
    if (off <= 1e-17 * scale || off == 0.0) break;
    for (int p = 0; p < N; ++p)
      for (int q = p + 1; q < N; ++q) {
        const double apq = A(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double tau = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
        for (int k = 0; k < N; ++k) {
          const double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < N; ++k) {
          const double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(N);
  for (int i = 0; i < N; ++i) ev[i] = A(i, i);
  std::sort(ev.begin(), ev.end());
  // the real embedding doubles every eigenvalue
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = 0.5 * (ev[2 * i] + ev[2 * i + 1]);
  return out;
}

}  // namespace plasma
