#include "core/normal_forms.hpp"

namespace bifkit {

SystemDef fold_normal_form() {
  SystemDef sys;
  sys.dim = 1;
  sys.name = "fold_nf";
  sys.eval_f = [](double lambda, std::span<const double> u, std::span<double> f) {
    f[0] = lambda - u[0] * u[0];
  };
  sys.jac_u = [](double, std::span<const double> u) {
    DenseMatrix j(1, 1);
    j(0, 0) = -2.0 * u[0];
    return j;
  };
  sys.jac_lambda = [](double, std::span<const double>) {
    return std::vector<double>{1.0};
  };
  return sys;
}

SystemDef hopf_normal_form() {
  SystemDef sys;
  sys.dim = 2;
  sys.name = "hopf_nf";
  sys.eval_f = [](double lambda, std::span<const double> u, std::span<double> f) {
    const double r2 = u[0] * u[0] + u[1] * u[1];
    f[0] = lambda * u[0] - u[1] - u[0] * r2;
    f[1] = u[0] + lambda * u[1] - u[1] * r2;
  };
  sys.jac_u = [](double lambda, std::span<const double> u) {
    const double x = u[0], y = u[1];
    const double r2 = x * x + y * y;
    DenseMatrix j(2, 2);
    j(0, 0) = lambda - r2 - 2.0 * x * x;
    j(0, 1) = -1.0 - 2.0 * x * y;
    j(1, 0) = 1.0 - 2.0 * x * y;
    j(1, 1) = lambda - r2 - 2.0 * y * y;
    return j;
  };
  sys.jac_lambda = [](double, std::span<const double> u) {
    return std::vector<double>{u[0], u[1]};
  };
  return sys;
}

SystemDef circle_system() {
  SystemDef sys;
  sys.dim = 1;
  sys.name = "circle";
  sys.eval_f = [](double lambda, std::span<const double> u, std::span<double> f) {
    f[0] = u[0] * u[0] + lambda * lambda - 1.0;
  };
  sys.jac_u = [](double, std::span<const double> u) {
    DenseMatrix j(1, 1);
    j(0, 0) = 2.0 * u[0];
    return j;
  };
  sys.jac_lambda = [](double lambda, std::span<const double>) {
    return std::vector<double>{2.0 * lambda};
  };
  return sys;
}

}  // namespace bifkit
