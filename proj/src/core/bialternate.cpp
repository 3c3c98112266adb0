#include "core/bialternate.hpp"

#include "core/errors.hpp"

namespace bifkit {

DenseMatrix bialternate(const DenseMatrix& a) {
  if (!a.square()) fail(ErrorCode::invalid_argument, "bialternate: matrix must be square");
  const int n = a.rows();
  if (n < 2) fail(ErrorCode::dimension_too_small, "bialternate: requires n >= 2");

  const int m = n * (n - 1) / 2;
  DenseMatrix b(m, m);
  // 0-based multi-indices: row (p,q) with p > q, column (r,s) with r > s.
  int row = 0;
  for (int p = 1; p < n; ++p) {
    for (int q = 0; q < p; ++q, ++row) {
      int col = 0;
      for (int r = 1; r < n; ++r) {
        for (int s = 0; s < r; ++s, ++col) {
          double v = 0.0;
          if (r == q) {
            v = -a(p, s);
          } else if (r != p && s == q) {
            v = a(p, r);
          } else if (r == p && s == q) {
            v = a(p, p) + a(q, q);
          } else if (r == p && s != q) {
            v = a(q, s);
          } else if (s == p) {
            v = -a(q, r);
          }
          b(row, col) = v;
        }
      }
    }
  }
  return b;
}

}  // namespace bifkit
