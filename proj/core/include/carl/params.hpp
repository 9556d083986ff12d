#pragma once

#include <complex>

#include "carl/constants.hpp"

namespace carl {

// Cavity, atom and drive parameters. Angular rates are stored in rad/s,
// everything else in SI. U0 is a direct input, not derived from atomic
// structure; it is negative for red atom-pump detuning (trapping at
// antinodes). All closed-form results depend on U0 only through U0^2.
struct SystemParams {
  double kappa;       // cavity amplitude decay rate [rad/s]
  double fsr;         // free spectral range delta = c / round-trip length [Hz]
  double lambda;      // optical wavelength [m]
  double mirror_T;    // mirror intensity transmission
  double u0;          // one-photon light shift U0 [rad/s]
  double delta_c;     // cavity detuning Delta_c [rad/s]
  double n_atoms;     // physical atom number N
  double mass;        // atomic mass [kg]
  double eta_plus;    // pump rate eta_+ [1/s]
  double eta_minus;   // reverse pump rate eta_- [1/s], 0 when one-sided
  double gamma_fric;  // molasses friction coefficient [rad/s]

  double wavenumber() const { return constants::two_pi / lambda; }
  double omega() const {
    return constants::two_pi * constants::speed_of_light / lambda;
  }

  // Apparatus defaults: 8.5 cm ring cavity at 797 nm, kappa = 2pi x 22 kHz,
  // T = 1.8e-6, 1e6 Rb-85 atoms. The pump is locked to the atom-shifted
  // resonance (delta_c = N U0) and set to 2 W intracavity power.
  static SystemParams defaults();

  void validate() const;  // throws ValidationError
};

struct DerivedParams {
  std::complex<double> chi;         // kappa + i(N U0 - Delta_c)
  std::complex<double> alpha_plus;  // stationary pump amplitude eta_+ / chi
  double epsilon;                   // hbar k^2 / m, twice the recoil shift [rad/s]
  double k;                         // wavenumber [1/m]
};

DerivedParams derive(const SystemParams& p);

// chi = kappa + i N U0 - i Delta_c
std::complex<double> susceptibility(const SystemParams& p);

// Stationary pump amplitude eta_+ / chi; throws ValidationError on chi == 0.
std::complex<double> stationary_pump(const SystemParams& p);

// Intracavity power hbar omega delta |alpha|^2; times mirror_T if outcoupled.
double power_from_amplitude(std::complex<double> alpha, const SystemParams& p,
                            bool outcoupled = false);

// Inverse of power_from_amplitude on magnitudes.
double amplitude_from_power(double power_watts, const SystemParams& p,
                            bool outcoupled = false);

// epsilon = hbar k^2 / m
double recoil_parameter(const SystemParams& p);

// eta = sqrt(delta kappa) * alpha_in
double pump_rate_from_input(double alpha_in, const SystemParams& p);

// Probe-pump beat: Delta_omega = 2 k v, exact linear bijection.
double beat_from_velocity(double v, const SystemParams& p);
double velocity_from_beat(double delta_omega, const SystemParams& p);

}  // namespace carl
