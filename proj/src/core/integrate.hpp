#pragma once

#include <span>
#include <vector>

#include "core/system.hpp"

namespace bifkit {

struct TrajectoryPoint {
  double t;
  std::vector<double> u;
};

// Fixed-step classical RK4 from t = 0 to t_end at lambda held constant.
// Emits the initial state and every step. Throws BlowUp when any component
// exceeds 1e6 in magnitude or turns non-finite.
std::vector<TrajectoryPoint> integrate(const SystemDef& sys, double lambda,
                                       std::span<const double> u0, double dt,
                                       double t_end);

}  // namespace bifkit
