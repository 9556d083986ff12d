#include "carl/analytic.hpp"

#include <cmath>

#include "carl/errors.hpp"

namespace carl {

void ParticipationModel::validate() const {
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw ValidationError("participation fraction must lie in (0, 1]");
}

namespace {

std::complex<double> chi_eff(const SystemParams& p, double n_eff) {
  return {p.kappa, n_eff * p.u0 - p.delta_c};
}

// eps N_eff U0^2 eta_+^2, the drive strength all closed forms share.
double drive(const SystemParams& p, double n_eff) {
  return recoil_parameter(p) * n_eff * p.u0 * p.u0 * p.eta_plus * p.eta_plus;
}

}  // namespace

std::complex<double> beta_steady(double kv, const SystemParams& p,
                                 ParticipationModel part) {
  part.validate();
  const double n_eff = part.n_eff(p);
  const std::complex<double> chi = chi_eff(p, n_eff);
  const std::complex<double> shifted = chi + std::complex<double>(0.0, 2.0 * kv);
  return std::complex<double>(0.0, -1.0) * n_eff * p.u0 * p.eta_plus /
         (chi * shifted);
}

MeanFieldState meanfield_state(double kv, const SystemParams& p,
                               ParticipationModel part) {
  return {kv, beta_steady(kv, p, part)};
}

double meanfield_rhs(double kv, const SystemParams& p,
                     ParticipationModel part) {
  part.validate();
  const double n_eff = part.n_eff(p);
  const std::complex<double> chi = chi_eff(p, n_eff);
  const std::complex<double> shifted = chi + std::complex<double>(0.0, 2.0 * kv);
  const double gain = 4.0 * drive(p, n_eff) / std::norm(chi) *
                      (1.0 / shifted).real();
  return gain - p.gamma_fric * kv;
}

double solve_depressed_cubic(double p_coeff, double r) {
  if (!(p_coeff > 0.0))
    throw ValidationError("solve_depressed_cubic: p must be > 0");
  if (r == 0.0) return 0.0;
  const double h = std::abs(r) / 2.0;
  const double third = p_coeff / 3.0;
  const double s = std::sqrt(h * h + third * third * third);
  // Vieta substitution: the small cube-root term equals -(p/3)/u exactly,
  // avoiding the h - s cancellation at large |r|.
  const double u = std::cbrt(h + s);
  const double x = u - third / u;
  return r > 0.0 ? x : -x;
}

double cubic_chirp(double t, const SystemParams& p, ParticipationModel part) {
  part.validate();
  const double r = 3.0 * drive(p, part.n_eff(p)) * t / p.kappa;
  return solve_depressed_cubic(3.0 * p.kappa * p.kappa / 4.0, r);
}

SteadyVelocity steady_velocity(const SystemParams& p,
                               ParticipationModel part) {
  part.validate();
  if (!(p.gamma_fric > 0.0))
    throw ValidationError("steady_velocity: gamma_fric must be > 0");
  const double r = drive(p, part.n_eff(p)) / (p.kappa * p.gamma_fric);
  SteadyVelocity s;
  s.exact = solve_depressed_cubic(p.kappa * p.kappa / 4.0, r);
  s.asymptotic = std::cbrt(r);
  return s;
}

}  // namespace carl
