#pragma once

#include <complex>

#include "carl/params.hpp"

namespace carl {

// Effective atom number N_eff = fraction * N standing in for imperfect
// bunching; the mean-field layer uses N_eff wherever N appears.
struct ParticipationModel {
  double fraction = 1.0;

  void validate() const;  // 0 < fraction <= 1
  double n_eff(const SystemParams& p) const { return fraction * p.n_atoms; }
};

// Perfect-bunching reduction: center-of-mass kv and the probe envelope in
// the comoving ansatz alpha_- = beta e^{2ikx}.
struct MeanFieldState {
  double kv;                  // rad/s
  std::complex<double> beta;  // comoving probe amplitude
};

// beta = -i N U0 eta_+ / (chi (chi + 2ikv)), with N -> N_eff and
// chi -> kappa + i(N_eff U0 - Delta_c).
std::complex<double> beta_steady(double kv, const SystemParams& p,
                                 ParticipationModel part = {});

MeanFieldState meanfield_state(double kv, const SystemParams& p,
                               ParticipationModel part = {});

// d(kv)/dt = (4 eps N U0^2 eta_+^2 / |chi|^2) Re[1/(chi + 2ikv)] - gamma kv
double meanfield_rhs(double kv, const SystemParams& p,
                     ParticipationModel part = {});

// Unique real root of x^3 + p x = r with p > 0, evaluated in the
// cancellation-free Vieta form x = u - (p/3)/u, u^3 = |r|/2 + s,
// s = sqrt((r/2)^2 + (p/3)^3).
double solve_depressed_cubic(double p_coeff, double r);

// Frictionless chirp under the locking condition Delta_c = N_eff U0 and
// kv(0) = 0: the unique real root of
//   (kv)^3 + (3 kappa^2/4) kv = 3 eps N_eff U0^2 eta_+^2 t / kappa,
// the exact first integral of the mean-field equation of motion.
double cubic_chirp(double t, const SystemParams& p,
                   ParticipationModel part = {});

// Friction-limited steady state under the locking condition. `exact` solves
// (kv)^3 + (kappa^2/4) kv = eps N_eff U0^2 eta_+^2 / (kappa gamma), the
// fixed point of meanfield_rhs; `asymptotic` drops the kappa^2/4 term
// (valid for 2kv >> kappa). Throws ValidationError when gamma_fric <= 0.
struct SteadyVelocity {
  double exact;       // rad/s
  double asymptotic;  // rad/s
};
SteadyVelocity steady_velocity(const SystemParams& p,
                               ParticipationModel part = {});

}  // namespace carl
