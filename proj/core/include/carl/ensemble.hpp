#pragma once

#include <cstddef>
#include <vector>

#include "carl/params.hpp"
#include "carl/rng.hpp"
#include "carl/scenario.hpp"

namespace carl {

// Macro-particle ensemble in the scaled coordinates the equations of motion
// actually use: phi_n = 2 k x_n (unwrapped, unbounded) and u_n = k v_n.
// Each macro-particle stands for `weight` physical atoms; weight times the
// particle count equals the physical atom number N.
struct EnsembleState {
  std::vector<double> phases;             // phi_n [rad]
  std::vector<double> scaled_velocities;  // u_n [rad/s]
  double weight = 1.0;

  std::size_t size() const { return phases.size(); }
  double total_atoms() const { return weight * static_cast<double>(size()); }
};

// Resolves cfg.weight (auto: n_atoms / n_particles) and checks the product
// constraint weight * n_particles == n_atoms.
double resolve_weight(const ScenarioConfig& cfg, const SystemParams& p);

// Velocities are Maxwell-Boltzmann at cfg.temperature. Positions are uniform
// on [0, 2pi) for homogeneous_thermal; for bunched_thermal they follow the
// Boltzmann weight exp(-V(phi)/kB T) of the symmetric standing-wave potential
// of depth V0 = 4 hbar |U0| |alpha_+|^2, sampled by rejection over one
// period. Draw order is all velocities first, then all positions.
EnsembleState sample_initial(const ScenarioConfig& cfg, const SystemParams& p,
                             Rng& rng);

// Same, with a fresh Rng(cfg.seed).
EnsembleState sample_initial(const ScenarioConfig& cfg, const SystemParams& p);

}  // namespace carl
