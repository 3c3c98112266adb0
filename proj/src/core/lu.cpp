#include "core/lu.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include "core/errors.hpp"

namespace bifkit {

LUFactorization lu_factor(const DenseMatrix& a) {
  if (!a.square()) fail(ErrorCode::invalid_argument, "lu_factor: matrix must be square");
  const int n = a.rows();
  const double pivot_floor = 1e-14 * a.max_abs();

  LUFactorization f;
  f.lu = a;
  f.perm.resize(n);
  std::iota(f.perm.begin(), f.perm.end(), 0);

  DenseMatrix& m = f.lu;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double piv_abs = std::abs(m(k, k));
    for (int i = k + 1; i < n; ++i) {
      double v = std::abs(m(i, k));
      if (v > piv_abs) {
        piv_abs = v;
        piv = i;
      }
    }
    if (piv_abs <= pivot_floor) {
      f.singular = true;
      return f;
    }
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
      f.parity = -f.parity;
    }
    const double inv_pivot = 1.0 / m(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double l = m(i, k) * inv_pivot;
      m(i, k) = l;
      for (int j = k + 1; j < n; ++j) m(i, j) -= l * m(k, j);
    }
  }
  return f;
}

std::vector<double> LUFactorization::solve(std::span<const double> b) const {
  if (singular) fail(ErrorCode::singular_matrix, "lu_solve: singular factorization");
  const int dim = n();
  if (static_cast<int>(b.size()) != dim)
    fail(ErrorCode::invalid_argument, "lu_solve: right-hand-side length mismatch");

  std::vector<double> x(dim);
  for (int i = 0; i < dim; ++i) {
    double s = b[perm[i]];
    for (int k = 0; k < i; ++k) s -= lu(i, k) * x[k];
    x[i] = s;
  }
  for (int i = dim - 1; i >= 0; --i) {
    double s = x[i];
    for (int k = i + 1; k < dim; ++k) s -= lu(i, k) * x[k];
    x[i] = s / lu(i, i);
  }
  return x;
}

double LUFactorization::determinant() const {
  if (singular) return 0.0;
  double det = static_cast<double>(parity);
  for (int i = 0; i < n(); ++i) det *= lu(i, i);
  return det;
}

double determinant(const DenseMatrix& a) { return lu_factor(a).determinant(); }

}  // namespace bifkit
