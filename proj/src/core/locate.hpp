#pragma once

#include <span>
#include <vector>

#include "core/dense_matrix.hpp"
#include "core/detect.hpp"
#include "core/system.hpp"

namespace bifkit {

// Solution of the fold extended system G(lambda, u, h) =
// [F; D_uF h; h_k - 1] = 0: the point itself plus the null eigenvector.
struct LPSolution {
  double lambda = 0.0;
  std::vector<double> u;
  std::vector<double> h;  // D_uF h = 0, normalized by h[k] = 1
  int iterations = 0;
  double residual = 0.0;  // final ||G||_inf
  int k_index = 0;        // normalization index actually used
};

// Solution of the Hopf extended system H(lambda, beta, u, h, g) =
// [F; D_uF h + beta g; D_uF g - beta h; h_k - 1; g_k] = 0:
// eigenpair +-i*beta with complex eigenvector h + i g.
struct HopfSolution {
  double lambda = 0.0;
  double beta = 0.0;  // angular frequency, > 0
  std::vector<double> u;
  std::vector<double> h;
  std::vector<double> g;
  int iterations = 0;
  double residual = 0.0;  // final ||H||_inf
  int k_index = 0;
};

// D_u(D_uF(lambda,u) h): central finite differences of the Jacobian in
// direction h (step 1e-6 * (1 + ||u||_inf)) unless the system supplies an
// analytic override.
DenseMatrix second_directional_derivative(const SystemDef& sys, double lambda,
                                          std::span<const double> u,
                                          std::span<const double> h);

// Newton on the (2n+1)-dimensional fold system, started from the bracket
// endpoint with the smaller |psi_LP|, h0 = e_1, k = 1. If the extended
// Jacobian is singular the normalization index is retried once at
// argmax|h_i|. Throws NoConvergence / SingularExtendedJacobian.
LPSolution locate_lp(const SystemDef& sys, const BifurcationEvent& event,
                     double tol = 1e-9, int max_iter = 25);

// Newton on the (3n+2)-dimensional Hopf system; beta0 is the positive
// imaginary part of the crossing eigenpair at the bracket's best endpoint,
// h0 = e_1, g0 = 0, k = 1, with the same k fallback as locate_lp.
HopfSolution locate_hopf(const SystemDef& sys, const BifurcationEvent& event,
                         double tol = 1e-9, int max_iter = 25);

}  // namespace bifkit
