#pragma once

#include <vector>

#include "plasma/types.hpp"

namespace plasma {

// Dense row-major complex matrix
struct CMatrix {
  int n = 0;
  std::vector<Cpx> a;

  explicit CMatrix(int size = 0) : n(size), a(std::size_t(size) * size) {}
  Cpx& operator()(int i, int j) { return a[std::size_t(i) * n + j]; }
  const Cpx& operator()(int i, int j) const { return a[std::size_t(i) * n + j]; }
};

double hermitian_asymmetry(const CMatrix& m);

// Eigenvalues of a Hermitian matrix in ascending order, by cyclic Jacobi on
// the real symmetric embedding [[Re, -Im], [Im, Re]]. Throws
// NonHermitianInput when max |m_ij - conj m_ji| > 1e-10; the matrix is
// symmetrized before iterating.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

}  // namespace plasma
