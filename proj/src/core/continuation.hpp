#pragma once

#include <limits>
#include <span>
#include <vector>

#include "core/eigen_qr.hpp"
#include "core/system.hpp"

namespace bifkit {

struct ContinuationSettings {
  double ds = 0.05;           // arc-length step
  int max_steps = 1000;
  double newton_tol = 1e-9;   // residual tolerance ||F||_inf
  int newton_max_iter = 20;
  int direction = +1;         // sign of dlambda/ds at the seed
  double lambda_min = -std::numeric_limits<double>::infinity();
  double lambda_max = std::numeric_limits<double>::infinity();

  void validate() const;
};

enum class Stability { stable, unstable, marginal };

struct CurvePoint {
  double s = 0.0;  // cumulated arclength
  double lambda = 0.0;
  std::vector<double> u;
  EigenSet eigenvalues;
  double psi_lp = 0.0;
  double psi_h = 0.0;
  Stability stability = Stability::stable;
};

struct Tangent {
  double dlambda = 0.0;
  std::vector<double> du;
};

// Current/previous points on the curve plus the seed tangent; the
// constraint direction for step n is tangent0 when n == 0 and the secant
// of the last two points otherwise.
struct ContinuationState {
  int n = 0;
  double lambda_cur = 0.0;
  std::vector<double> u_cur;
  double lambda_prev = 0.0;
  std::vector<double> u_prev;
  Tangent tangent0;
};

struct StepResult {
  double lambda = 0.0;
  std::vector<double> u;
  int newton_iters = 0;
};

struct TraceStats {
  int total_newton_iters = 0;
  int step_halvings = 0;
  double max_secant_deviation = 0.0;  // max | ||secant|| / ds - 1 |
};

// Newton solve of F(lambda, u) = 0 at fixed lambda, damped by residual
// line search (up to 30 halvings per iteration). Throws NoConvergence.
std::vector<double> seed_equilibrium(const SystemDef& sys, double lambda,
                                     std::span<const double> guess, double tol,
                                     int max_iter);

// Seed tangent (dlambda/ds, du/ds) of unit norm; `direction` picks the sign
// of dlambda/ds. Throws SingularJacobian at a fold.
Tangent initial_tangent(const SystemDef& sys, double lambda0, std::span<const double> u0,
                        int direction);

// One pseudo-arclength predictor-corrector step of length ds from
// state.current (the previous point is the Newton start). Throws
// NewtonDiverged / SingularBorderedSystem.
StepResult continuation_step(const SystemDef& sys, const ContinuationState& state,
                             double ds, const ContinuationSettings& settings);

// Full trace: seed tangent once, then steps until max_steps or lambda
// leaves [lambda_min, lambda_max]. On Newton failure the step is retried
// at half length (at most 8 halvings); the nominal length is restored
// after 3 consecutive successes. Emits the seed point first.
std::vector<CurvePoint> trace_curve(const SystemDef& sys, double seed_lambda,
                                    std::span<const double> seed_u,
                                    const ContinuationSettings& settings,
                                    TraceStats* stats = nullptr);

Stability classify_stability(const EigenSet& eigen);

}  // namespace bifkit
