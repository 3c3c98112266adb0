#include "core/locate.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/lu.hpp"

namespace bifkit {

namespace {

// d/dlambda of D_uF(lambda,u) h, central differences.
std::vector<double> jac_lambda_derivative_times(const SystemDef& sys, double lambda,
                                                std::span<const double> u,
                                                std::span<const double> h) {
  const int n = sys.dim;
  const double step = 1e-6 * (1.0 + std::abs(lambda));
  const DenseMatrix jp = sys.jacobian_u(lambda + step, u);
  const DenseMatrix jm = sys.jacobian_u(lambda - step, u);
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += (jp(i, j) - jm(i, j)) * h[j];
    out[i] = s / (2.0 * step);
  }
  return out;
}

std::vector<double> mat_vec(const DenseMatrix& m, std::span<const double> v) {
  std::vector<double> out(m.rows(), 0.0);
  for (int i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

int argmax_abs(std::span<const double> v) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(v.size()); ++i)
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  return best;
}

}  // namespace

DenseMatrix second_directional_derivative(const SystemDef& sys, double lambda,
                                          std::span<const double> u,
                                          std::span<const double> h) {
  if (sys.jac_u_directional2) return sys.jac_u_directional2(lambda, u, h);
  const int n = sys.dim;
  const double step = 1e-6 * (1.0 + norm_inf(u));
  std::vector<double> up(n), um(n);
  for (int i = 0; i < n; ++i) {
    up[i] = u[i] + step * h[i];
    um[i] = u[i] - step * h[i];
  }
  const DenseMatrix jp = sys.jacobian_u(lambda, up);
  const DenseMatrix jm = sys.jacobian_u(lambda, um);
  DenseMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = (jp(i, j) - jm(i, j)) / (2.0 * step);
  return out;
}

namespace {

// One Newton campaign on G with a fixed normalization index k.
// Returns false when the extended Jacobian went singular (retry with a
// different k); throws NoConvergence when out of iterations.
bool newton_lp(const SystemDef& sys, double& lambda, std::vector<double>& u,
               std::vector<double>& h, int k, double tol, int max_iter,
               int& iters, double& residual) {
  const int n = sys.dim;
  const int dim = 2 * n + 1;

  std::vector<double> g(dim), rhs(dim);
  for (int iter = 1; iter <= max_iter; ++iter) {
    const std::vector<double> f = sys.eval(lambda, u);
    const DenseMatrix jac = sys.jacobian_u(lambda, u);
    const std::vector<double> jh = mat_vec(jac, h);
    for (int i = 0; i < n; ++i) g[i] = f[i];
    for (int i = 0; i < n; ++i) g[n + i] = jh[i];
    g[2 * n] = h[k] - 1.0;

    residual = norm_inf(g);
    iters = iter - 1;
    if (residual <= tol) return true;

    const std::vector<double> flam = sys.jacobian_lambda(lambda, u);
    const std::vector<double> jlam_h = jac_lambda_derivative_times(sys, lambda, u, h);
    const DenseMatrix d2 = second_directional_derivative(sys, lambda, u, h);

    // Columns ordered (lambda, u, h).
    DenseMatrix dg(dim, dim);
    for (int i = 0; i < n; ++i) {
      dg(i, 0) = flam[i];
      for (int j = 0; j < n; ++j) dg(i, 1 + j) = jac(i, j);
      dg(n + i, 0) = jlam_h[i];
      for (int j = 0; j < n; ++j) dg(n + i, 1 + j) = d2(i, j);
      for (int j = 0; j < n; ++j) dg(n + i, 1 + n + j) = jac(i, j);
    }
    dg(2 * n, 1 + n + k) = 1.0;

    const LUFactorization lu = lu_factor(dg);
    if (lu.singular) return false;
    for (int i = 0; i < dim; ++i) rhs[i] = -g[i];
    const std::vector<double> d = lu.solve(rhs);

    lambda += d[0];
    for (int i = 0; i < n; ++i) u[i] += d[1 + i];
    for (int i = 0; i < n; ++i) h[i] += d[1 + n + i];
    h[k] = 1.0;  // the normalization row is linear; keep it exact
  }
  fail(ErrorCode::no_convergence, "locate_lp: Newton did not converge");
}

}  // namespace

LPSolution locate_lp(const SystemDef& sys, const BifurcationEvent& event, double tol,
                     int max_iter) {
  if (event.kind != EventKind::limit_point)
    fail(ErrorCode::invalid_argument, "locate_lp: event is not a limit point");
  const int n = sys.dim;
  const CurvePoint& start = event.best();

  LPSolution sol;
  sol.lambda = start.lambda;
  sol.u = start.u;
  sol.h.assign(n, 0.0);
  int k = 0;  // paper's default normalization index
  sol.h[k] = 1.0;

  try {
    if (!newton_lp(sys, sol.lambda, sol.u, sol.h, k, tol, max_iter, sol.iterations,
                   sol.residual)) {
      // Singular extended Jacobian: retry with the dominant component of h.
      const int k2 = argmax_abs(sol.h);
      sol.lambda = start.lambda;
      sol.u = start.u;
      sol.h.assign(n, 0.0);
      sol.h[k2] = 1.0;
      k = k2;
      if (!newton_lp(sys, sol.lambda, sol.u, sol.h, k, tol, max_iter, sol.iterations,
                     sol.residual))
        fail(ErrorCode::singular_extended_jacobian,
             "locate_lp: extended Jacobian singular for both normalization indices");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::no_convergence || e.code() == ErrorCode::domain_violation)
      fail(ErrorCode::locate_failure, std::string("locate_lp: ") + e.what());
    throw;
  }
  sol.k_index = k;
  // One more residual evaluation at the converged point for reporting.
  const std::vector<double> f = sys.eval(sol.lambda, sol.u);
  const std::vector<double> jh = mat_vec(sys.jacobian_u(sol.lambda, sol.u), sol.h);
  sol.residual = std::max(norm_inf(f), norm_inf(jh));
  return sol;
}

namespace {

bool newton_hopf(const SystemDef& sys, double& lambda, double& beta,
                 std::vector<double>& u, std::vector<double>& h, std::vector<double>& g,
                 int k, double tol, int max_iter, int& iters, double& residual) {
  const int n = sys.dim;
  const int dim = 3 * n + 2;

  std::vector<double> res(dim), rhs(dim);
  for (int iter = 1; iter <= max_iter; ++iter) {
    const std::vector<double> f = sys.eval(lambda, u);
    const DenseMatrix jac = sys.jacobian_u(lambda, u);
    const std::vector<double> jh = mat_vec(jac, h);
    const std::vector<double> jg = mat_vec(jac, g);
    for (int i = 0; i < n; ++i) res[i] = f[i];
    for (int i = 0; i < n; ++i) res[n + i] = jh[i] + beta * g[i];
    for (int i = 0; i < n; ++i) res[2 * n + i] = jg[i] - beta * h[i];
    res[3 * n] = h[k] - 1.0;
    res[3 * n + 1] = g[k];

    residual = norm_inf(res);
    iters = iter - 1;
    if (residual <= tol) return true;

    const std::vector<double> flam = sys.jacobian_lambda(lambda, u);
    const std::vector<double> jlam_h = jac_lambda_derivative_times(sys, lambda, u, h);
    const std::vector<double> jlam_g = jac_lambda_derivative_times(sys, lambda, u, g);
    const DenseMatrix d2h = second_directional_derivative(sys, lambda, u, h);
    const DenseMatrix d2g = second_directional_derivative(sys, lambda, u, g);

    // Columns ordered (lambda, beta, u, h, g).
    const int col_u = 2, col_h = 2 + n, col_g = 2 + 2 * n;
    DenseMatrix dh(dim, dim);
    for (int i = 0; i < n; ++i) {
      dh(i, 0) = flam[i];
      for (int j = 0; j < n; ++j) dh(i, col_u + j) = jac(i, j);

      dh(n + i, 0) = jlam_h[i];
      dh(n + i, 1) = g[i];
      for (int j = 0; j < n; ++j) dh(n + i, col_u + j) = d2h(i, j);
      for (int j = 0; j < n; ++j) dh(n + i, col_h + j) = jac(i, j);
      dh(n + i, col_g + i) = beta;

      dh(2 * n + i, 0) = jlam_g[i];
      dh(2 * n + i, 1) = -h[i];
      for (int j = 0; j < n; ++j) dh(2 * n + i, col_u + j) = d2g(i, j);
      dh(2 * n + i, col_h + i) = -beta;
      for (int j = 0; j < n; ++j) dh(2 * n + i, col_g + j) = jac(i, j);
    }
    dh(3 * n, col_h + k) = 1.0;
    dh(3 * n + 1, col_g + k) = 1.0;

    const LUFactorization lu = lu_factor(dh);
    if (lu.singular) return false;
    for (int i = 0; i < dim; ++i) rhs[i] = -res[i];
    const std::vector<double> d = lu.solve(rhs);

    lambda += d[0];
    beta += d[1];
    for (int i = 0; i < n; ++i) u[i] += d[col_u + i];
    for (int i = 0; i < n; ++i) h[i] += d[col_h + i];
    for (int i = 0; i < n; ++i) g[i] += d[col_g + i];
    h[k] = 1.0;
    g[k] = 0.0;
  }
  fail(ErrorCode::no_convergence, "locate_hopf: Newton did not converge");
}

}  // namespace

HopfSolution locate_hopf(const SystemDef& sys, const BifurcationEvent& event, double tol,
                         int max_iter) {
  if (event.kind != EventKind::hopf_candidate)
    fail(ErrorCode::invalid_argument, "locate_hopf: event is not a Hopf candidate");
  const int n = sys.dim;
  const CurvePoint& start = event.best();

  double beta0 = event.beta_hint;
  if (!(beta0 > 0.0)) {
    // Fall back to any complex pair at the start point.
    for (const auto& ev : start.eigenvalues.values)
      if (ev.imag() > 1e-8) beta0 = std::max(beta0, ev.imag());
  }
  if (!(beta0 > 0.0))
    fail(ErrorCode::locate_failure,
         "locate_hopf: no complex eigenpair at the bracket endpoint");

  HopfSolution sol;
  sol.lambda = start.lambda;
  sol.beta = beta0;
  sol.u = start.u;
  sol.h.assign(n, 0.0);
  sol.g.assign(n, 0.0);
  int k = 0;
  sol.h[k] = 1.0;

  try {
    if (!newton_hopf(sys, sol.lambda, sol.beta, sol.u, sol.h, sol.g, k, tol, max_iter,
                     sol.iterations, sol.residual)) {
      const int k2 = argmax_abs(sol.h);
      sol.lambda = start.lambda;
      sol.beta = beta0;
      sol.u = start.u;
      sol.h.assign(n, 0.0);
      sol.g.assign(n, 0.0);
      sol.h[k2] = 1.0;
      k = k2;
      if (!newton_hopf(sys, sol.lambda, sol.beta, sol.u, sol.h, sol.g, k, tol, max_iter,
                       sol.iterations, sol.residual))
        fail(ErrorCode::singular_extended_jacobian,
             "locate_hopf: extended Jacobian singular for both normalization indices");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::no_convergence || e.code() == ErrorCode::domain_violation)
      fail(ErrorCode::locate_failure, std::string("locate_hopf: ") + e.what());
    throw;
  }
  sol.k_index = k;
  if (sol.beta < 0.0) {  // (beta, g) -> (-beta, -g) is the same solution
    sol.beta = -sol.beta;
    for (double& x : sol.g) x = -x;
  }
  return sol;
}

}  // namespace bifkit
