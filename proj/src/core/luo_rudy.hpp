#pragma once

#include <span>
#include <string>
#include <vector>

#include "core/system.hpp"

namespace bifkit {

// Fixed parameters of the Luo-Rudy I ventricular cardiomyocyte model.
// The stimulus current I_st is the continuation parameter lambda; it sits
// here only as the resting default used when the model is evaluated as a
// plain parameter vector.
//
// Units: mV, ms, mM, uA/cm^2, uF/cm^2, mS/cm^2, K.
struct ParamSet {
  double I_st = 0.0;
  double C_m = 1.0;
  double g_Na = 23.0;
  double g_si = 0.09;
  double g_K = 0.282;    // time-dependent K conductance at K_o = 5.4 (scales with sqrt(K_o/5.4))
  double g_K1 = 0.6047;  // inward-rectifier conductance at K_o = 5.4 (same scaling)
  double g_Kp = 0.0183;
  double g_b = 0.03921;
  double Na_o = 140.0;
  double Na_i = 18.0;
  double K_o = 5.4;
  double K_i = 145.0;
  double PR_NaK = 0.01833;
  double E_b = -59.87;
  double T = 310.0;

  void validate() const;  // concentrations and T strictly positive

  // Named access for the configuration file; key names follow the model's
  // conventional symbols. Unknown keys are rejected.
  void set(const std::string& key, double value);
  static bool is_param_key(const std::string& key);
};

// State layout: u = (V, Ca_i, h, j, m, d, f, X).
inline constexpr int kLr1Dim = 8;

// Build the 8-dimensional Luo-Rudy I system with lambda = I_st.
// eval_f throws DomainViolation for Ca_i <= 0 or rate-function overflow.
// Jacobians are hand-coded analytic.
SystemDef lr1_system(const ParamSet& params);

// Resting-state seed guess: V = -84 mV, Ca_i = 2e-4 mM, gates at their
// V = -84 steady states (the `lr1-rest` preset).
std::vector<double> lr1_rest_guess(const ParamSet& params);

// Gate steady states alpha/(alpha+beta) at potential V, order (h,j,m,d,f,X).
std::vector<double> lr1_gate_steady_states(double v);

}  // namespace bifkit
