#include "core/continuation.hpp"

#include <cmath>

#include "core/detect.hpp"
#include "core/errors.hpp"
#include "core/lu.hpp"

namespace bifkit {

namespace {

constexpr double kStabilityMargin = 1e-8;
constexpr double kConstraintTol = 1e-12;
constexpr int kMaxHalvings = 8;
constexpr int kRestoreAfter = 3;

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

void ContinuationSettings::validate() const {
  if (!(ds > 0.0)) fail(ErrorCode::bad_config, "settings: ds must be positive");
  if (!(newton_tol > 0.0)) fail(ErrorCode::bad_config, "settings: newton_tol must be positive");
  if (newton_max_iter < 1) fail(ErrorCode::bad_config, "settings: newton_max_iter must be >= 1");
  if (max_steps < 1) fail(ErrorCode::bad_config, "settings: max_steps must be >= 1");
  if (direction != 1 && direction != -1)
    fail(ErrorCode::bad_config, "settings: direction must be +1 or -1");
  if (!(lambda_min < lambda_max))
    fail(ErrorCode::bad_config, "settings: lambda_min must be below lambda_max");
}

std::vector<double> seed_equilibrium(const SystemDef& sys, double lambda,
                                     std::span<const double> guess, double tol,
                                     int max_iter) {
  std::vector<double> u(guess.begin(), guess.end());
  std::vector<double> f = sys.eval(lambda, u);

  for (int iter = 0; iter < max_iter; ++iter) {
    if (norm_inf(f) <= tol) return u;

    const LUFactorization lu = lu_factor(sys.jacobian_u(lambda, u));
    if (lu.singular)
      fail(ErrorCode::no_convergence, "seed_equilibrium: singular Jacobian at iterate");
    std::vector<double> rhs(f.size());
    for (size_t i = 0; i < f.size(); ++i) rhs[i] = -f[i];
    const std::vector<double> step = lu.solve(rhs);

    // Damped update: halve until the residual 2-norm decreases.
    const double f0 = norm2(f);
    double scale = 1.0;
    bool accepted = false;
    std::vector<double> trial(u.size());
    for (int halve = 0; halve <= 30; ++halve) {
      for (size_t i = 0; i < u.size(); ++i) trial[i] = u[i] + scale * step[i];
      try {
        std::vector<double> ft = sys.eval(lambda, trial);
        if (norm2(ft) < f0) {
          u = std::move(trial);
          trial.resize(u.size());
          f = std::move(ft);
          accepted = true;
          break;
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::domain_violation) throw;
      }
      scale *= 0.5;
    }
    if (!accepted)
      fail(ErrorCode::no_convergence, "seed_equilibrium: line search stalled");
  }
  if (norm_inf(f) <= tol) return u;
  fail(ErrorCode::no_convergence, "seed_equilibrium: no convergence after max_iter");
}

Tangent initial_tangent(const SystemDef& sys, double lambda0, std::span<const double> u0,
                        int direction) {
  const int n = sys.dim;
  const LUFactorization lu = lu_factor(sys.jacobian_u(lambda0, u0));
  if (lu.singular)
    fail(ErrorCode::singular_jacobian,
         "initial_tangent: singular Jacobian at the seed (fold?); perturb lambda");

  std::vector<double> rhs = sys.jacobian_lambda(lambda0, u0);
  for (double& x : rhs) x = -x;
  const std::vector<double> uhat = lu.solve(rhs);

  double sum_sq = 0.0;
  for (double x : uhat) sum_sq += x * x;

  Tangent t;
  t.dlambda = direction / std::sqrt(sum_sq + 1.0);
  t.du.resize(n);
  for (int i = 0; i < n; ++i) t.du[i] = uhat[i] * t.dlambda;
  return t;
}

StepResult continuation_step(const SystemDef& sys, const ContinuationState& state,
                             double ds, const ContinuationSettings& settings) {
  const int n = sys.dim;

  // Constraint direction: seed tangent at n = 0, otherwise the secant,
  // renormalized to unit length (the secant may deviate from ds after a
  // halved step).
  std::vector<double> w_u(n);
  double w_lambda;
  if (state.n == 0) {
    w_u = state.tangent0.du;
    w_lambda = state.tangent0.dlambda;
  } else {
    for (int i = 0; i < n; ++i) w_u[i] = state.u_cur[i] - state.u_prev[i];
    w_lambda = state.lambda_cur - state.lambda_prev;
  }
  double wn = w_lambda * w_lambda;
  for (double x : w_u) wn += x * x;
  wn = std::sqrt(wn);
  if (!(wn > 0.0))
    fail(ErrorCode::newton_diverged, "continuation_step: zero constraint direction");
  for (double& x : w_u) x /= wn;
  w_lambda /= wn;

  // Newton start = previous accepted point.
  std::vector<double> u = state.u_cur;
  double lambda = state.lambda_cur;

  auto constraint = [&](double lam, const std::vector<double>& uu) {
    double c = w_lambda * (lam - state.lambda_cur) - ds;
    for (int i = 0; i < n; ++i) c += w_u[i] * (uu[i] - state.u_cur[i]);
    return c;
  };

  try {
    for (int iter = 1; iter <= settings.newton_max_iter; ++iter) {
      const std::vector<double> f = sys.eval(lambda, u);
      const DenseMatrix jac = sys.jacobian_u(lambda, u);
      const std::vector<double> flam = sys.jacobian_lambda(lambda, u);

      // Bordered (n+1) x (n+1) system: [J  dF/dlambda; w_u  w_lambda].
      DenseMatrix b(n + 1, n + 1);
      std::vector<double> rhs(n + 1);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) b(i, j) = jac(i, j);
        b(i, n) = flam[i];
        rhs[i] = -f[i];
      }
      for (int j = 0; j < n; ++j) b(n, j) = w_u[j];
      b(n, n) = w_lambda;
      rhs[n] = -constraint(lambda, u);

      const LUFactorization lu = lu_factor(b);
      if (lu.singular)
        fail(ErrorCode::singular_bordered_system,
             "continuation_step: singular bordered system");
      const std::vector<double> d = lu.solve(rhs);
      for (int i = 0; i < n; ++i) u[i] += d[i];
      lambda += d[n];

      const std::vector<double> fnew = sys.eval(lambda, u);
      if (norm_inf(fnew) <= settings.newton_tol &&
          std::abs(constraint(lambda, u)) <= kConstraintTol) {
        return {lambda, std::move(u), iter};
      }
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::domain_violation)
      fail(ErrorCode::newton_diverged, "continuation_step: iterate left the domain");
    throw;
  }
  fail(ErrorCode::newton_diverged, "continuation_step: Newton did not converge");
}

Stability classify_stability(const EigenSet& eigen) {
  bool any_marginal = false;
  bool all_negative = true;
  for (const auto& ev : eigen.values) {
    if (std::abs(ev.real()) <= kStabilityMargin) any_marginal = true;
    if (!(ev.real() < -kStabilityMargin)) all_negative = false;
  }
  if (any_marginal) return Stability::marginal;
  return all_negative ? Stability::stable : Stability::unstable;
}

namespace {

CurvePoint make_point(const SystemDef& sys, double s, double lambda,
                      std::vector<double> u) {
  CurvePoint p;
  p.s = s;
  p.lambda = lambda;
  p.u = std::move(u);
  p.eigenvalues = eigenvalues(sys.jacobian_u(lambda, p.u));
  p.psi_lp = psi_lp(sys, lambda, p.u);
  p.psi_h = psi_h(sys, lambda, p.u);
  p.stability = classify_stability(p.eigenvalues);
  return p;
}

}  // namespace

std::vector<CurvePoint> trace_curve(const SystemDef& sys, double seed_lambda,
                                    std::span<const double> seed_u,
                                    const ContinuationSettings& settings,
                                    TraceStats* stats) {
  settings.validate();
  const std::vector<double> f0 = sys.eval(seed_lambda, seed_u);
  if (norm_inf(f0) > settings.newton_tol)
    fail(ErrorCode::invalid_argument, "trace_curve: seed does not satisfy tolerance");

  TraceStats local_stats;
  TraceStats& st = stats ? *stats : local_stats;

  ContinuationState state;
  state.n = 0;
  state.lambda_cur = seed_lambda;
  state.u_cur.assign(seed_u.begin(), seed_u.end());
  state.tangent0 = initial_tangent(sys, seed_lambda, seed_u, settings.direction);

  std::vector<CurvePoint> curve;
  curve.reserve(settings.max_steps + 1);
  curve.push_back(make_point(sys, 0.0, seed_lambda, state.u_cur));

  double s = 0.0;
  double ds_cur = settings.ds;
  int consecutive_ok = 0;

  while (state.n < settings.max_steps) {
    StepResult res;
    int halvings = 0;
    for (;;) {
      try {
        res = continuation_step(sys, state, ds_cur, settings);
        break;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::newton_diverged &&
            e.code() != ErrorCode::singular_bordered_system)
          throw;
        if (++halvings > kMaxHalvings)
          fail(ErrorCode::trace_abort,
               "trace_curve: step failed after " + std::to_string(kMaxHalvings) +
                   " halvings at step " + std::to_string(state.n) +
                   " (lambda=" + std::to_string(state.lambda_cur) + ")");
        ds_cur *= 0.5;
        ++st.step_halvings;
        consecutive_ok = 0;
      }
    }

    st.total_newton_iters += res.newton_iters;
    s += ds_cur;

    // Secant bookkeeping for diagnostics.
    double secant = (res.lambda - state.lambda_cur) * (res.lambda - state.lambda_cur);
    for (int i = 0; i < sys.dim; ++i) {
      const double d = res.u[i] - state.u_cur[i];
      secant += d * d;
    }
    st.max_secant_deviation =
        std::max(st.max_secant_deviation, std::abs(std::sqrt(secant) / ds_cur - 1.0));

    state.lambda_prev = state.lambda_cur;
    state.u_prev = state.u_cur;
    state.lambda_cur = res.lambda;
    state.u_cur = res.u;
    ++state.n;

    if (ds_cur < settings.ds && ++consecutive_ok >= kRestoreAfter) {
      ds_cur = std::min(2.0 * ds_cur, settings.ds);
      consecutive_ok = 0;
    }

    curve.push_back(make_point(sys, s, state.lambda_cur, state.u_cur));
    if (state.lambda_cur < settings.lambda_min || state.lambda_cur > settings.lambda_max)
      break;
  }
  return curve;
}

}  // namespace bifkit
