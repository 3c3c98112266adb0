#include "core/dense_matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "core/errors.hpp"

namespace bifkit {

DenseMatrix::DenseMatrix(int n_rows, int n_cols)
    : rows_(n_rows), cols_(n_cols), e_(static_cast<size_t>(n_rows) * n_cols, 0.0) {
  if (n_rows <= 0 || n_cols <= 0)
    fail(ErrorCode::invalid_argument, "DenseMatrix: dimensions must be positive");
}

DenseMatrix::DenseMatrix(int n_rows, int n_cols, std::vector<double> entries)
    : rows_(n_rows), cols_(n_cols), e_(std::move(entries)) {
  if (n_rows <= 0 || n_cols <= 0)
    fail(ErrorCode::invalid_argument, "DenseMatrix: dimensions must be positive");
  if (e_.size() != static_cast<size_t>(n_rows) * n_cols)
    fail(ErrorCode::invalid_argument, "DenseMatrix: entry count does not match shape");
  if (!all_finite())
    fail(ErrorCode::invalid_argument, "DenseMatrix: non-finite entry");
}

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (double v : e_) m = std::max(m, std::abs(v));
  return m;
}

bool DenseMatrix::all_finite() const {
  for (double v : e_)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace bifkit
