#pragma once

#include <vector>

namespace bifkit {

// Row-major dense real matrix. Small sizes only (the toolkit targets
// n <= 64); no view/expression machinery, just contiguous storage.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int n_rows, int n_cols);  // zero-filled
  // Takes ownership of `entries` (row-major, length n_rows*n_cols).
  // Rejects non-finite entries.
  DenseMatrix(int n_rows, int n_cols, std::vector<double> entries);

  static DenseMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_ && rows_ > 0; }

  double& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  double* data() { return e_.data(); }
  const double* data() const { return e_.data(); }

  double max_abs() const;
  bool all_finite() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> e_;
};

}  // namespace bifkit
