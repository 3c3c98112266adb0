#include "support/oracles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bifkit::testing {

namespace {

double cofactor_det_recursive(const std::vector<double>& a, int n) {
  if (n == 1) return a[0];
  if (n == 2) return a[0] * a[3] - a[1] * a[2];
  double det = 0.0;
  std::vector<double> minor((n - 1) * (n - 1));
  for (int col = 0; col < n; ++col) {
    int mi = 0;
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (j != col) minor[mi++] = a[i * n + j];
    const double sign = (col % 2 == 0) ? 1.0 : -1.0;
    det += sign * a[col] * cofactor_det_recursive(minor, n - 1);
  }
  return det;
}

}  // namespace

double cofactor_determinant(const DenseMatrix& a) {
  const int n = a.rows();
  std::vector<double> flat(a.data(), a.data() + n * n);
  return cofactor_det_recursive(flat, n);
}

std::vector<double> gauss_solve(DenseMatrix a, std::vector<double> b) {
  const int n = a.rows();
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (a(piv, k) == 0.0) throw std::runtime_error("gauss_solve: singular");
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(b[k], b[piv]);
    }
    const double inv = 1.0 / a(k, k);
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      const double factor = a(i, k) * inv;
      for (int j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
      b[i] -= factor * b[k];
    }
  }
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a(i, i);
  return x;
}

std::vector<double> poly_from_roots(const std::vector<double>& roots) {
  std::vector<double> coeffs{1.0};
  for (double r : roots) {
    std::vector<double> next(coeffs.size() + 1, 0.0);
    for (size_t i = 0; i < coeffs.size(); ++i) {
      next[i] += coeffs[i];
      next[i + 1] -= r * coeffs[i];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

DenseMatrix companion_matrix(const std::vector<double>& monic_coeffs) {
  const int n = static_cast<int>(monic_coeffs.size()) - 1;
  DenseMatrix c(n, n);
  for (int i = 0; i < n; ++i) c(0, i) = -monic_coeffs[i + 1];
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  return c;
}

double multiset_match_distance(std::vector<std::complex<double>> a,
                               std::vector<std::complex<double>> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (d < best_d) {
        best_d = d;
        best = static_cast<int>(j);
      }
    }
    used[best] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

DenseMatrix random_matrix(std::mt19937& rng, int n, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace bifkit::testing
