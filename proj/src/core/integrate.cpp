#include "core/integrate.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace bifkit {

std::vector<TrajectoryPoint> integrate(const SystemDef& sys, double lambda,
                                       std::span<const double> u0, double dt,
                                       double t_end) {
  if (!(dt > 0.0)) fail(ErrorCode::invalid_argument, "integrate: dt must be positive");
  const int n = sys.dim;
  const long steps = std::lround(t_end / dt);

  std::vector<TrajectoryPoint> traj;
  traj.reserve(steps + 1);
  std::vector<double> u(u0.begin(), u0.end());
  traj.push_back({0.0, u});

  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
  for (long step = 0; step < steps; ++step) {
    sys.eval_f(lambda, u, k1);
    for (int i = 0; i < n; ++i) tmp[i] = u[i] + 0.5 * dt * k1[i];
    sys.eval_f(lambda, tmp, k2);
    for (int i = 0; i < n; ++i) tmp[i] = u[i] + 0.5 * dt * k2[i];
    sys.eval_f(lambda, tmp, k3);
    for (int i = 0; i < n; ++i) tmp[i] = u[i] + dt * k3[i];
    sys.eval_f(lambda, tmp, k4);
    for (int i = 0; i < n; ++i)
      u[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

    for (double x : u)
      if (!std::isfinite(x) || std::abs(x) > 1e6)
        fail(ErrorCode::blow_up, "integrate: trajectory blow-up in " + sys.name);
    traj.push_back({(step + 1) * dt, u});
  }
  return traj;
}

}  // namespace bifkit
