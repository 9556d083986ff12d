#include "carl/params.hpp"

#include <cmath>

#include "carl/errors.hpp"

namespace carl {

using constants::atomic_mass_unit;
using constants::hbar;
using constants::rb85_mass_amu;
using constants::speed_of_light;
using constants::two_pi;

SystemParams SystemParams::defaults() {
  SystemParams p{};
  p.kappa = two_pi * 22e3;
  p.fsr = speed_of_light / 0.085;
  p.lambda = 797.0e-9;
  p.mirror_T = 1.8e-6;
  p.u0 = -0.03;
  p.n_atoms = 1e6;
  p.delta_c = p.n_atoms * p.u0;
  p.mass = rb85_mass_amu * atomic_mass_unit;
  p.eta_minus = 0.0;
  p.gamma_fric = 0.0;
  // 2 W intracavity under the locking condition (|chi| = kappa).
  p.eta_plus = p.kappa * std::sqrt(2.0 / (hbar * p.omega() * p.fsr));
  return p;
}

void SystemParams::validate() const {
  if (!(kappa > 0.0)) throw ValidationError("params: kappa must be > 0");
  if (!(fsr > 0.0)) throw ValidationError("params: fsr must be > 0");
  if (!(lambda > 0.0)) throw ValidationError("params: lambda must be > 0");
  if (!(mirror_T > 0.0 && mirror_T < 1.0))
    throw ValidationError("params: mirror_T must lie in (0, 1)");
  if (!(n_atoms >= 0.0)) throw ValidationError("params: n_atoms must be >= 0");
  if (!(mass > 0.0)) throw ValidationError("params: mass must be > 0");
  if (!(gamma_fric >= 0.0))
    throw ValidationError("params: gamma_fric must be >= 0");
  if (!std::isfinite(u0) || !std::isfinite(delta_c) ||
      !std::isfinite(eta_plus) || !std::isfinite(eta_minus))
    throw ValidationError("params: non-finite value");
}

std::complex<double> susceptibility(const SystemParams& p) {
  return {p.kappa, p.n_atoms * p.u0 - p.delta_c};
}

std::complex<double> stationary_pump(const SystemParams& p) {
  const std::complex<double> chi = susceptibility(p);
  if (chi == std::complex<double>(0.0, 0.0))
    throw ValidationError("stationary_pump: chi = 0 is unphysical (kappa > 0)");
  return p.eta_plus / chi;
}

DerivedParams derive(const SystemParams& p) {
  DerivedParams d;
  d.chi = susceptibility(p);
  d.alpha_plus = stationary_pump(p);
  d.epsilon = recoil_parameter(p);
  d.k = p.wavenumber();
  return d;
}

double power_from_amplitude(std::complex<double> alpha, const SystemParams& p,
                            bool outcoupled) {
  const double photon_rate = hbar * p.omega() * p.fsr;  // W per photon
  const double power = photon_rate * std::norm(alpha);
  return outcoupled ? p.mirror_T * power : power;
}

double amplitude_from_power(double power_watts, const SystemParams& p,
                            bool outcoupled) {
  if (power_watts < 0.0)
    throw ValidationError("amplitude_from_power: negative power");
  const double photon_rate = hbar * p.omega() * p.fsr;
  const double cavity = outcoupled ? power_watts / p.mirror_T : power_watts;
  return std::sqrt(cavity / photon_rate);
}

double recoil_parameter(const SystemParams& p) {
  if (!(p.mass > 0.0)) throw ValidationError("recoil_parameter: mass must be > 0");
  const double k = p.wavenumber();
  return hbar * k * k / p.mass;
}

double pump_rate_from_input(double alpha_in, const SystemParams& p) {
  return std::sqrt(p.fsr * p.kappa) * alpha_in;
}

double beat_from_velocity(double v, const SystemParams& p) {
  return 2.0 * p.wavenumber() * v;
}

double velocity_from_beat(double delta_omega, const SystemParams& p) {
  return delta_omega / (2.0 * p.wavenumber());
}

}  // namespace carl
