#include "carl/ensemble.hpp"

#include <cmath>
#include <string>

#include "carl/errors.hpp"

namespace carl {

using constants::hbar;
using constants::k_boltzmann;
using constants::pi;
using constants::two_pi;

namespace {

// Rejection sampling of exp(conc * cos(phi)) over one period, peak at 0.
// The acceptance ratio is normalized to the peak, so it never overflows.
double sample_standing_wave_phase(Rng& rng, double conc) {
  for (;;) {
    const double phi = pi * (2.0 * rng.uniform() - 1.0);
    if (rng.uniform() <= std::exp(conc * (std::cos(phi) - 1.0))) return phi;
  }
}

}  // namespace

double resolve_weight(const ScenarioConfig& cfg, const SystemParams& p) {
  const double count = static_cast<double>(cfg.n_particles);
  if (!cfg.weight.has_value()) return p.n_atoms / count;
  const double w = *cfg.weight;
  if (std::abs(w * count - p.n_atoms) > 1e-9 * std::max(1.0, p.n_atoms))
    throw ValidationError(
        "ensemble: weight * n_particles = " + std::to_string(w * count) +
        " does not match n_atoms = " + std::to_string(p.n_atoms));
  return w;
}

EnsembleState sample_initial(const ScenarioConfig& cfg, const SystemParams& p,
                             Rng& rng) {
  if (!(cfg.temperature > 0.0))
    throw ValidationError("ensemble: temperature must be > 0");

  EnsembleState ens;
  ens.weight = resolve_weight(cfg, p);
  ens.phases.resize(cfg.n_particles);
  ens.scaled_velocities.resize(cfg.n_particles);

  // 1D Maxwell-Boltzmann: <1/2 m v^2> = 1/2 kB T.
  const double v_thermal = std::sqrt(k_boltzmann * cfg.temperature / p.mass);
  const double k = p.wavenumber();
  for (double& u : ens.scaled_velocities) u = k * v_thermal * rng.normal();

  if (cfg.initial_distribution == InitialDistribution::homogeneous_thermal) {
    for (double& phi : ens.phases) phi = two_pi * rng.uniform();
  } else {
    // Pump plus equal reverse field: depth V0 = 4 hbar |U0| |alpha_+|^2,
    // Boltzmann weight exp(-V/kB T) is a von Mises law with concentration
    // V0 / (2 kB T).
    const double v0 =
        4.0 * hbar * std::abs(p.u0) * std::norm(stationary_pump(p));
    const double conc = v0 / (2.0 * k_boltzmann * cfg.temperature);
    if (conc > 1e7)
      throw ValidationError(
          "ensemble: V0/kB T overflows the bunched sampler (temperature too "
          "low for the potential depth)");
    for (double& phi : ens.phases) phi = sample_standing_wave_phase(rng, conc);
  }
  return ens;
}

EnsembleState sample_initial(const ScenarioConfig& cfg, const SystemParams& p) {
  Rng rng(cfg.seed);
  return sample_initial(cfg, p, rng);
}

}  // namespace carl
