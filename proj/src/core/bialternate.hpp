#pragma once

#include "core/dense_matrix.hpp"

namespace bifkit {

// Bialternate product 2A (.) I_n of an n x n matrix A (n >= 2): an m x m
// matrix, m = n(n-1)/2, whose spectrum is the multiset of pairwise
// eigenvalue sums {lambda_i + lambda_j : i > j} of A. Rows and columns are
// indexed by multi-indices (p,q), p = 2..n, q = 1..p-1, linearized as
// (p-1)(p-2)/2 + q (1-based).
DenseMatrix bialternate(const DenseMatrix& a);

}  // namespace bifkit
