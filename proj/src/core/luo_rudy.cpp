#include "core/luo_rudy.hpp"

#include <cmath>
#include <memory>

#include "core/errors.hpp"

namespace bifkit {

namespace {

// ---------------------------------------------------------------------------
// Model constants (Luo & Rudy, Circ Res 68:1501-1526, 1991).
//
// Slow inward current reversal: E_si = c1 - c2*ln(Ca_i), so the driving
// term is V - c1 + c2*ln(Ca_i). Calcium update: d[Ca]/dt = -c3*I_si
// + c4*(c5 - [Ca]).
// ---------------------------------------------------------------------------
constexpr double kC1 = 7.7;
constexpr double kC2 = 13.0287;
constexpr double kC3 = 1e-4;
constexpr double kC4 = 0.07;
constexpr double kC5 = 1e-4;

constexpr double kGasConstant = 8.314;  // J/(mol K)
constexpr double kFaraday = 96485.0;    // C/mol

// h/j rate expressions switch branches here.
constexpr double kGateSeamV = -40.0;
// X_i is set to 1 at and below this potential.
constexpr double kXiFloorV = -100.0;

constexpr double kExpArgMax = 700.0;

double checked_exp(double x) {
  if (x > kExpArgMax)
    fail(ErrorCode::domain_violation, "lr1: rate-function argument overflow");
  return std::exp(x);
}

// Value and d/dV of a voltage-dependent rate.
struct Rate {
  double v = 0.0;
  double dv = 0.0;
};

// c * exp(k*(V+a1)) / (1 + exp(s*(V+a2)))
Rate exp_ratio(double c, double k, double a1, double s, double a2, double vm) {
  const double num = c * checked_exp(k * (vm + a1));
  const double e = checked_exp(s * (vm + a2));
  const double den = 1.0 + e;
  Rate r;
  r.v = num / den;
  r.dv = r.v * (k - s * e / den);
  return r;
}

// a*x/(1 - exp(-b*x)) with x = V - v0; removable singularity at x = 0,
// replaced by its Taylor limit for |x| < 1e-7.
Rate sing_ratio(double a, double b, double v0, double vm) {
  const double x = vm - v0;
  const double y = b * x;
  Rate r;
  if (std::abs(x) < 1e-7) {
    r.v = (a / b) * (1.0 + 0.5 * y + y * y / 12.0);
    r.dv = a * (0.5 + y / 6.0);
    return r;
  }
  const double d = -std::expm1(-y);  // 1 - e^{-y}
  const double emy = 1.0 - d;        // e^{-y}
  const double g = y / d;
  const double dg = (d - y * emy) / (d * d);
  r.v = (a / b) * g;
  r.dv = a * dg;
  return r;
}

struct GateRates {
  Rate alpha[6];  // order: h, j, m, d, f, X
  Rate beta[6];
};

enum GateIndex { kH = 0, kJ = 1, kM = 2, kD = 3, kF = 4, kX = 5 };

GateRates gate_rates(double vm) {
  GateRates g;

  g.alpha[kM] = sing_ratio(0.32, 0.1, -47.13, vm);
  {
    const double e = checked_exp(-vm / 11.0);
    g.beta[kM] = {0.08 * e, -0.08 / 11.0 * e};
  }

  if (vm < kGateSeamV) {
    {
      const double e = checked_exp(-(80.0 + vm) / 6.8);
      g.alpha[kH] = {0.135 * e, -0.135 / 6.8 * e};
    }
    {
      const double e1 = checked_exp(0.079 * vm);
      const double e2 = checked_exp(0.35 * vm);
      g.beta[kH] = {3.56 * e1 + 3.1e5 * e2, 3.56 * 0.079 * e1 + 3.1e5 * 0.35 * e2};
    }
    {
      // alpha_j = (A e^{pV} + B e^{qV}) (V + 37.78) / (1 + e^{0.311 (V + 79.23)})
      const double ea = -1.2714e5 * checked_exp(0.2444 * vm);
      const double eb = -3.474e-5 * checked_exp(-0.04391 * vm);
      const double num = ea + eb;
      const double dnum = 0.2444 * ea - 0.04391 * eb;
      const double lin = vm + 37.78;
      const double e = checked_exp(0.311 * (vm + 79.23));
      const double den = 1.0 + e;
      const double val = num * lin / den;
      g.alpha[kJ] = {val, (dnum * lin + num) / den - val * 0.311 * e / den};
    }
    g.beta[kJ] = exp_ratio(0.1212, -0.01052, 0.0, -0.1378, 40.14, vm);
  } else {
    g.alpha[kH] = {0.0, 0.0};
    {
      // 1 / (0.13 (1 + e^{(V+10.66)/-11.1}))
      const double e = checked_exp(-(vm + 10.66) / 11.1);
      const double den = 0.13 * (1.0 + e);
      const double val = 1.0 / den;
      g.beta[kH] = {val, val * (e / 11.1) / (1.0 + e)};
    }
    g.alpha[kJ] = {0.0, 0.0};
    g.beta[kJ] = exp_ratio(0.3, -2.535e-7, 0.0, -0.1, 32.0, vm);
  }

  g.alpha[kD] = exp_ratio(0.095, -0.01, -5.0, -0.072, -5.0, vm);
  g.beta[kD] = exp_ratio(0.07, -0.017, 44.0, 0.05, 44.0, vm);
  g.alpha[kF] = exp_ratio(0.012, -0.008, 28.0, 0.15, 28.0, vm);
  g.beta[kF] = exp_ratio(0.0065, -0.02, 30.0, -0.2, 30.0, vm);
  g.alpha[kX] = exp_ratio(0.0005, 0.083, 50.0, 0.057, 50.0, vm);
  g.beta[kX] = exp_ratio(0.0013, -0.06, 20.0, -0.04, 20.0, vm);
  return g;
}

// Steady-state inactivation of I_K; removable singularity at V = -77.
Rate xi_gate(double vm) {
  if (vm <= kXiFloorV) return {1.0, 0.0};
  const double x = vm + 77.0;
  const double y = 0.04 * x;
  double q, dq;  // q(y) = (e^y - 1)/y and its d/dy
  if (std::abs(x) < 1e-7) {
    q = 1.0 + 0.5 * y + y * y / 6.0;
    dq = 0.5 + y / 3.0;
  } else {
    q = std::expm1(y) / y;
    dq = (checked_exp(y) * (y - 1.0) + 1.0) / (y * y);
  }
  const double em = checked_exp(-0.04 * (vm + 35.0));
  const double c = 2.837 * 0.04;
  return {c * q * em, c * 0.04 * em * (dq - q)};
}

// Nernst potentials and scaled conductances derived from the ParamSet.
struct Derived {
  double e_na, e_k, e_k1, e_kp;
  double gk, gk1;
};

Derived derive(const ParamSet& p) {
  const double rtf = 1000.0 * kGasConstant * p.T / kFaraday;  // mV
  Derived d;
  d.e_na = rtf * std::log(p.Na_o / p.Na_i);
  d.e_k = rtf * std::log((p.K_o + p.PR_NaK * p.Na_o) / (p.K_i + p.PR_NaK * p.Na_i));
  d.e_k1 = rtf * std::log(p.K_o / p.K_i);
  d.e_kp = d.e_k1;
  const double scale = std::sqrt(p.K_o / 5.4);
  d.gk = p.g_K * scale;
  d.gk1 = p.g_K1 * scale;
  return d;
}

// Steady-state inward-rectifier gate K1_inf(V) = aK1/(aK1+bK1).
Rate k1_inf_gate(double vm, double e_k1) {
  const double z = vm - e_k1;
  Rate a, b;
  {
    const double e = checked_exp(0.2385 * (z - 59.215));
    const double den = 1.0 + e;
    a.v = 1.02 / den;
    a.dv = -a.v * 0.2385 * e / den;
  }
  {
    const double e1 = 0.49124 * checked_exp(0.08032 * (z + 5.476));
    const double e2 = checked_exp(0.06175 * (z - 594.31));
    const double num = e1 + e2;
    const double dnum = 0.08032 * e1 + 0.06175 * e2;
    const double e3 = checked_exp(-0.5143 * (z + 4.753));
    const double den = 1.0 + e3;
    b.v = num / den;
    b.dv = dnum / den + b.v * 0.5143 * e3 / den;
  }
  const double sum = a.v + b.v;
  return {a.v / sum, (a.dv * b.v - a.v * b.dv) / (sum * sum)};
}

// Plateau-current gate Kp(V).
Rate kp_gate(double vm) {
  const double e = checked_exp((7.488 - vm) / 5.98);
  const double den = 1.0 + e;
  const double val = 1.0 / den;
  return {val, val * (e / 5.98) / den};
}

struct Lr1Model {
  ParamSet p;
  Derived d;
};

void lr1_eval(const Lr1Model& m, double lambda, std::span<const double> u,
              std::span<double> f) {
  const double vm = u[0], ca = u[1];
  if (!(ca > 0.0)) fail(ErrorCode::domain_violation, "lr1: Ca_i must be positive");

  const GateRates gr = gate_rates(vm);
  const double h = u[2], j = u[3], mg = u[4], dg = u[5], fg = u[6], xg = u[7];

  const double i_na = m.p.g_Na * h * j * mg * mg * mg * (vm - m.d.e_na);
  const double e_si_drive = vm - kC1 + kC2 * std::log(ca);
  const double i_si = m.p.g_si * dg * fg * e_si_drive;
  const double i_k = m.d.gk * xg * xi_gate(vm).v * (vm - m.d.e_k);
  const double i_k1 = m.d.gk1 * k1_inf_gate(vm, m.d.e_k1).v * (vm - m.d.e_k1);
  const double i_kp = m.p.g_Kp * kp_gate(vm).v * (vm - m.d.e_kp);
  const double i_b = m.p.g_b * (vm - m.p.E_b);

  f[0] = -(lambda + i_na + i_si + i_k + i_k1 + i_kp + i_b) / m.p.C_m;
  f[1] = -kC3 * i_si + kC4 * (kC5 - ca);
  for (int g = 0; g < 6; ++g) {
    const double a = gr.alpha[g].v, b = gr.beta[g].v;
    f[2 + g] = a - (a + b) * u[2 + g];
  }
}

DenseMatrix lr1_jac_u(const Lr1Model& m, double lambda, std::span<const double> u) {
  (void)lambda;
  const double vm = u[0], ca = u[1];
  if (!(ca > 0.0)) fail(ErrorCode::domain_violation, "lr1: Ca_i must be positive");

  const GateRates gr = gate_rates(vm);
  const Rate xi = xi_gate(vm);
  const Rate k1 = k1_inf_gate(vm, m.d.e_k1);
  const Rate kp = kp_gate(vm);
  const double h = u[2], j = u[3], mg = u[4], dg = u[5], fg = u[6], xg = u[7];

  const double gna_hjm3 = m.p.g_Na * h * j * mg * mg * mg;
  const double e_si_drive = vm - kC1 + kC2 * std::log(ca);
  const double gsi_df = m.p.g_si * dg * fg;

  DenseMatrix jac(kLr1Dim, kLr1Dim);

  // dV/dt row
  const double di_dv = gna_hjm3 + gsi_df +
                       m.d.gk * xg * (xi.dv * (vm - m.d.e_k) + xi.v) +
                       m.d.gk1 * (k1.dv * (vm - m.d.e_k1) + k1.v) +
                       m.p.g_Kp * (kp.dv * (vm - m.d.e_kp) + kp.v) + m.p.g_b;
  const double inv_cm = 1.0 / m.p.C_m;
  jac(0, 0) = -di_dv * inv_cm;
  jac(0, 1) = -gsi_df * kC2 / ca * inv_cm;
  jac(0, 2) = -m.p.g_Na * j * mg * mg * mg * (vm - m.d.e_na) * inv_cm;
  jac(0, 3) = -m.p.g_Na * h * mg * mg * mg * (vm - m.d.e_na) * inv_cm;
  jac(0, 4) = -3.0 * m.p.g_Na * h * j * mg * mg * (vm - m.d.e_na) * inv_cm;
  jac(0, 5) = -m.p.g_si * fg * e_si_drive * inv_cm;
  jac(0, 6) = -m.p.g_si * dg * e_si_drive * inv_cm;
  jac(0, 7) = -m.d.gk * xi.v * (vm - m.d.e_k) * inv_cm;

  // d[Ca]/dt row
  jac(1, 0) = -kC3 * gsi_df;
  jac(1, 1) = -kC3 * gsi_df * kC2 / ca - kC4;
  jac(1, 5) = -kC3 * m.p.g_si * fg * e_si_drive;
  jac(1, 6) = -kC3 * m.p.g_si * dg * e_si_drive;

  // gate rows
  for (int g = 0; g < 6; ++g) {
    const Rate& a = gr.alpha[g];
    const Rate& b = gr.beta[g];
    jac(2 + g, 0) = a.dv - (a.dv + b.dv) * u[2 + g];
    jac(2 + g, 2 + g) = -(a.v + b.v);
  }
  return jac;
}

std::vector<double> lr1_jac_lambda(const Lr1Model& m, double /*lambda*/,
                                   std::span<const double> /*u*/) {
  std::vector<double> g(kLr1Dim, 0.0);
  g[0] = -1.0 / m.p.C_m;
  return g;
}

}  // namespace

void ParamSet::validate() const {
  if (!(C_m > 0.0)) fail(ErrorCode::bad_config, "lr1: C_m must be positive");
  if (!(Na_o > 0.0 && Na_i > 0.0 && K_o > 0.0 && K_i > 0.0))
    fail(ErrorCode::bad_config, "lr1: ion concentrations must be positive");
  if (!(T > 0.0)) fail(ErrorCode::bad_config, "lr1: temperature must be positive");
}

void ParamSet::set(const std::string& key, double value) {
  if (key == "I_st") I_st = value;
  else if (key == "C_m") C_m = value;
  else if (key == "g_Na") g_Na = value;
  else if (key == "g_si") g_si = value;
  else if (key == "g_K") g_K = value;
  else if (key == "g_K1") g_K1 = value;
  else if (key == "g_Kp") g_Kp = value;
  else if (key == "g_b" || key == "G_b") g_b = value;
  else if (key == "Na_o") Na_o = value;
  else if (key == "Na_i") Na_i = value;
  else if (key == "K_o") K_o = value;
  else if (key == "K_i") K_i = value;
  else if (key == "PR_NaK") PR_NaK = value;
  else if (key == "E_b") E_b = value;
  else if (key == "T") T = value;
  else fail(ErrorCode::bad_config, "lr1: unknown parameter key '" + key + "'");
}

bool ParamSet::is_param_key(const std::string& key) {
  static const char* keys[] = {"I_st", "C_m",  "g_Na",   "g_si", "g_K", "g_K1",
                               "g_Kp", "g_b",  "G_b",    "Na_o", "Na_i", "K_o",
                               "K_i",  "PR_NaK", "E_b",  "T"};
  for (const char* k : keys)
    if (key == k) return true;
  return false;
}

SystemDef lr1_system(const ParamSet& params) {
  params.validate();
  auto model = std::make_shared<Lr1Model>(Lr1Model{params, derive(params)});

  SystemDef sys;
  sys.dim = kLr1Dim;
  sys.name = "lr1";
  sys.eval_f = [model](double lambda, std::span<const double> u, std::span<double> f) {
    lr1_eval(*model, lambda, u, f);
  };
  sys.jac_u = [model](double lambda, std::span<const double> u) {
    return lr1_jac_u(*model, lambda, u);
  };
  sys.jac_lambda = [model](double lambda, std::span<const double> u) {
    return lr1_jac_lambda(*model, lambda, u);
  };
  return sys;
}

std::vector<double> lr1_gate_steady_states(double v) {
  const GateRates gr = gate_rates(v);
  std::vector<double> s(6);
  for (int g = 0; g < 6; ++g) s[g] = gr.alpha[g].v / (gr.alpha[g].v + gr.beta[g].v);
  return s;
}

std::vector<double> lr1_rest_guess(const ParamSet& params) {
  params.validate();
  std::vector<double> u(kLr1Dim);
  u[0] = -84.0;
  u[1] = 2e-4;
  const auto gates = lr1_gate_steady_states(u[0]);
  for (int g = 0; g < 6; ++g) u[2 + g] = gates[g];
  return u;
}

}  // namespace bifkit
