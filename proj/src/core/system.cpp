#include "core/system.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace bifkit {

double norm_inf(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> SystemDef::eval(double lambda, std::span<const double> u) const {
  std::vector<double> f(dim);
  eval_f(lambda, u, f);
  for (double x : f)
    if (!std::isfinite(x))
      fail(ErrorCode::domain_violation, "SystemDef(" + name + "): non-finite F value");
  return f;
}

DenseMatrix SystemDef::jacobian_u(double lambda, std::span<const double> u) const {
  DenseMatrix j = jac_u ? jac_u(lambda, u) : fd_jacobian_u(*this, lambda, u);
  if (!j.all_finite())
    fail(ErrorCode::domain_violation, "SystemDef(" + name + "): non-finite Jacobian");
  return j;
}

std::vector<double> SystemDef::jacobian_lambda(double lambda,
                                               std::span<const double> u) const {
  auto g = jac_lambda ? jac_lambda(lambda, u) : fd_jacobian_lambda(*this, lambda, u);
  for (double x : g)
    if (!std::isfinite(x))
      fail(ErrorCode::domain_violation, "SystemDef(" + name + "): non-finite dF/dlambda");
  return g;
}

DenseMatrix fd_jacobian_u(const SystemDef& sys, double lambda, std::span<const double> u) {
  const int n = sys.dim;
  DenseMatrix j(n, n);
  std::vector<double> up(u.begin(), u.end()), um(u.begin(), u.end());
  std::vector<double> fp(n), fm(n);
  for (int k = 0; k < n; ++k) {
    const double h = 1e-6 * (1.0 + std::abs(u[k]));
    up[k] = u[k] + h;
    um[k] = u[k] - h;
    sys.eval_f(lambda, up, fp);
    sys.eval_f(lambda, um, fm);
    for (int i = 0; i < n; ++i) j(i, k) = (fp[i] - fm[i]) / (2.0 * h);
    up[k] = u[k];
    um[k] = u[k];
  }
  return j;
}

std::vector<double> fd_jacobian_lambda(const SystemDef& sys, double lambda,
                                       std::span<const double> u) {
  const int n = sys.dim;
  const double h = 1e-6 * (1.0 + std::abs(lambda));
  std::vector<double> fp(n), fm(n), g(n);
  sys.eval_f(lambda + h, u, fp);
  sys.eval_f(lambda - h, u, fm);
  for (int i = 0; i < n; ++i) g[i] = (fp[i] - fm[i]) / (2.0 * h);
  return g;
}

}  // namespace bifkit
