#include "core/eigen_qr.hpp"

#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace bifkit {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Householder similarity reduction to upper Hessenberg form, in place.
void hessenberg_reduce(DenseMatrix& a) {
  const int n = a.rows();
  std::vector<double> v(n);
  for (int k = 0; k < n - 2; ++k) {
    double scale = 0.0;
    for (int i = k + 1; i < n; ++i) scale = std::max(scale, std::abs(a(i, k)));
    if (scale == 0.0) continue;

    double norm2 = 0.0;
    for (int i = k + 1; i < n; ++i) {
      v[i] = a(i, k) / scale;
      norm2 += v[i] * v[i];
    }
    double alpha = std::sqrt(norm2);
    if (v[k + 1] > 0.0) alpha = -alpha;
    v[k + 1] -= alpha;
    double vv = 0.0;
    for (int i = k + 1; i < n; ++i) vv += v[i] * v[i];
    if (vv == 0.0) continue;
    const double beta = 2.0 / vv;

    // A <- (I - beta v v') A
    for (int j = k; j < n; ++j) {
      double s = 0.0;
      for (int i = k + 1; i < n; ++i) s += v[i] * a(i, j);
      s *= beta;
      for (int i = k + 1; i < n; ++i) a(i, j) -= s * v[i];
    }
    // A <- A (I - beta v v')
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = k + 1; j < n; ++j) s += a(i, j) * v[j];
      s *= beta;
      for (int j = k + 1; j < n; ++j) a(i, j) -= s * v[j];
    }
    a(k + 1, k) = alpha * scale;
    for (int i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }
}

// Eigenvalues of the trailing 2x2 block [[a,b],[c,d]].
void eig2x2(double a, double b, double c, double d, std::complex<double>& l1,
            std::complex<double>& l2) {
  const double p = 0.5 * (a - d);
  const double q = p * p + b * c;
  const double z = std::sqrt(std::abs(q));
  if (q >= 0.0) {
    const double w = d + p + std::copysign(z, p);  // larger-magnitude root
    l1 = w;
    if (w != 0.0)
      l2 = (a * d - b * c) / w;
    else
      l2 = d + p - std::copysign(z, p);
  } else {
    l1 = {d + p, z};
    l2 = {d + p, -z};
  }
}

}  // namespace

EigenSet eigenvalues(const DenseMatrix& a) {
  if (!a.square()) fail(ErrorCode::invalid_argument, "eigenvalues: matrix must be square");
  const int n = a.rows();
  if (n > 64) fail(ErrorCode::invalid_argument, "eigenvalues: n > 64 unsupported");

  EigenSet out;
  out.values.assign(n, {0.0, 0.0});
  if (n == 1) {
    out.values[0] = a(0, 0);
    return out;
  }

  DenseMatrix h = a;
  hessenberg_reduce(h);

  // Overall scale used in the negligibility tests.
  double anorm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(h(i, j));
  if (anorm == 0.0) anorm = 1.0;

  const int max_sweeps = 100 * n;
  int sweeps = 0;
  double t = 0.0;  // accumulated exceptional-shift offset
  int nn = n - 1;
  int its = 0;

  while (nn >= 0) {
    // Find l such that h(l, l-1) is negligible (block lower edge).
    int l = nn;
    for (; l >= 1; --l) {
      double s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
      if (s == 0.0) s = anorm;
      if (std::abs(h(l, l - 1)) <= kEps * s) {
        h(l, l - 1) = 0.0;
        break;
      }
    }

    double x = h(nn, nn);
    if (l == nn) {  // single real eigenvalue deflates
      out.values[nn] = x + t;
      --nn;
      its = 0;
      continue;
    }

    double y = h(nn - 1, nn - 1);
    double w = h(nn, nn - 1) * h(nn - 1, nn);
    if (l == nn - 1) {  // 2x2 block deflates (real pair or complex pair)
      std::complex<double> l1, l2;
      eig2x2(y + t, h(nn - 1, nn), h(nn, nn - 1), x + t, l1, l2);
      out.values[nn - 1] = l1;
      out.values[nn] = l2;
      nn -= 2;
      its = 0;
      continue;
    }

    if (sweeps >= max_sweeps) {
      // Give up: report whatever the active diagonal holds.
      out.converged = false;
      for (int i = 0; i <= nn; ++i) out.values[i] = h(i, i) + t;
      return out;
    }

    if (its == 10 || its == 20) {
      // Exceptional shift to break symmetry-induced stalls.
      t += x;
      for (int i = 0; i <= nn; ++i) h(i, i) -= x;
      const double s = std::abs(h(nn, nn - 1)) + std::abs(h(nn - 1, nn - 2));
      y = x = 0.75 * s;
      w = -0.4375 * s * s;
    }
    ++its;
    ++sweeps;

    // Francis double-shift QR sweep on rows l..nn.
    double p = 0.0, q = 0.0, r = 0.0;
    int m = nn - 2;
    for (; m >= l; --m) {
      const double z = h(m, m);
      const double rr = x - z;
      const double ss = y - z;
      p = (rr * ss - w) / h(m + 1, m) + h(m, m + 1);
      q = h(m + 1, m + 1) - z - rr - ss;
      r = h(m + 2, m + 1);
      const double s = std::abs(p) + std::abs(q) + std::abs(r);
      p /= s;
      q /= s;
      r /= s;
      if (m == l) break;
      const double u = std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r));
      const double v = std::abs(p) * (std::abs(h(m - 1, m - 1)) + std::abs(z) +
                                      std::abs(h(m + 1, m + 1)));
      if (u <= kEps * v) break;
    }
    for (int i = m + 2; i <= nn; ++i) h(i, i - 2) = 0.0;
    for (int i = m + 3; i <= nn; ++i) h(i, i - 3) = 0.0;

    for (int k = m; k <= nn - 1; ++k) {
      if (k != m) {
        p = h(k, k - 1);
        q = h(k + 1, k - 1);
        r = (k != nn - 1) ? h(k + 2, k - 1) : 0.0;
        x = std::abs(p) + std::abs(q) + std::abs(r);
        if (x != 0.0) {
          p /= x;
          q /= x;
          r /= x;
        }
      }
      double s = std::copysign(std::sqrt(p * p + q * q + r * r), p);
      if (s == 0.0) continue;
      if (k == m) {
        if (l != m) h(k, k - 1) = -h(k, k - 1);
      } else {
        h(k, k - 1) = -s * x;
      }
      p += s;
      x = p / s;
      y = q / s;
      double z = r / s;
      q /= p;
      r /= p;
      for (int j = k; j <= nn; ++j) {  // row transform
        double pp = h(k, j) + q * h(k + 1, j);
        if (k != nn - 1) {
          pp += r * h(k + 2, j);
          h(k + 2, j) -= pp * z;
        }
        h(k + 1, j) -= pp * y;
        h(k, j) -= pp * x;
      }
      const int mmin = std::min(nn, k + 3);
      for (int i = l; i <= mmin; ++i) {  // column transform
        double pp = x * h(i, k) + y * h(i, k + 1);
        if (k != nn - 1) {
          pp += z * h(i, k + 2);
          h(i, k + 2) -= pp * r;
        }
        h(i, k + 1) -= pp * q;
        h(i, k) -= pp;
      }
    }
  }
  return out;
}

}  // namespace bifkit
