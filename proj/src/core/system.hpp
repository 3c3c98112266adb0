#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "core/dense_matrix.hpp"

namespace bifkit {

// A parameterized vector field F(lambda, u) with dimension n, optional
// analytic Jacobians and an optional analytic directional second
// derivative. Missing derivatives fall back to central finite differences
// of eval_f. Evaluation closures must be pure: a SystemDef may be shared
// read-only across concurrent runs.
struct SystemDef {
  int dim = 0;
  std::string name;

  std::function<void(double lambda, std::span<const double> u, std::span<double> f)> eval_f;
  // nullable -> finite-difference fallback
  std::function<DenseMatrix(double lambda, std::span<const double> u)> jac_u;
  std::function<std::vector<double>(double lambda, std::span<const double> u)> jac_lambda;
  // nullable analytic override for D_u(D_uF(lambda,u) h)
  std::function<DenseMatrix(double lambda, std::span<const double> u,
                            std::span<const double> h)>
      jac_u_directional2;

  std::vector<double> eval(double lambda, std::span<const double> u) const;
  DenseMatrix jacobian_u(double lambda, std::span<const double> u) const;
  std::vector<double> jacobian_lambda(double lambda, std::span<const double> u) const;
};

// Central finite differences of eval_f (step 1e-6 scaled per component).
DenseMatrix fd_jacobian_u(const SystemDef& sys, double lambda, std::span<const double> u);
std::vector<double> fd_jacobian_lambda(const SystemDef& sys, double lambda,
                                       std::span<const double> u);

double norm_inf(std::span<const double> v);

}  // namespace bifkit
