#pragma once

#include <complex>
#include <vector>

#include "core/dense_matrix.hpp"

namespace bifkit {

struct EigenSet {
  std::vector<std::complex<double>> values;
  bool converged = true;
};

// Eigenvalues of a real square matrix (n <= 64): Householder reduction to
// upper Hessenberg form, then shifted QR (Francis double step) with 2x2
// complex-pair deflation. Eigenvalues come out unordered. If the iteration
// exceeds 100*n sweeps the remaining block is read off the diagonal and
// `converged` is false.
EigenSet eigenvalues(const DenseMatrix& a);

}  // namespace bifkit
