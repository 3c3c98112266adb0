#pragma once

#include "core/system.hpp"

namespace bifkit {

// F(lambda, u) = lambda - u^2; limit point at (0, 0).
SystemDef fold_normal_form();

// F1 = lambda*u1 - u2 - u1*(u1^2 + u2^2)
// F2 = u1 + lambda*u2 - u2*(u1^2 + u2^2)
// Equilibrium u = 0 for every lambda; Hopf at lambda = 0 with beta = 1.
SystemDef hopf_normal_form();

// F(lambda, u) = u^2 + lambda^2 - 1; the equilibrium set is the unit
// circle, with folds at (lambda, u) = (+-1, 0).
SystemDef circle_system();

}  // namespace bifkit
