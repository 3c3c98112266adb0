#pragma once

#include <span>
#include <vector>

#include "core/dense_matrix.hpp"

namespace bifkit {

// LU factorization with partial pivoting, P*A = L*U packed in one matrix
// (unit lower triangle implicit). A pivot of magnitude below
// 1e-14 * max|A| marks the factorization singular; solve() then throws,
// determinant() returns exactly 0.
struct LUFactorization {
  DenseMatrix lu;          // packed L\U
  std::vector<int> perm;   // row i of PA is row perm[i] of A
  int parity = 1;          // sign of the permutation
  bool singular = false;

  int n() const { return lu.rows(); }

  std::vector<double> solve(std::span<const double> b) const;
  double determinant() const;
};

LUFactorization lu_factor(const DenseMatrix& a);

// Convenience: factor + determinant (0.0 for singular input).
double determinant(const DenseMatrix& a);

}  // namespace bifkit
