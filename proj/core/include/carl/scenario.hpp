#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace carl {

enum class InitialDistribution {
  bunched_thermal,      // Boltzmann in the symmetric standing-wave potential
  homogeneous_thermal,  // uniform positions
};

enum class EventKind { set_eta_minus, set_gamma_fric };

// Piecewise-constant parameter switch. Times snap to the nearest integer
// step; events are applied before the step at that time.
struct ScenarioEvent {
  double time;  // s
  EventKind kind;
  double value;
};

struct ScenarioConfig {
  InitialDistribution initial_distribution =
      InitialDistribution::homogeneous_thermal;
  double temperature = 200e-6;  // K
  std::uint64_t seed = 1;

  double t_end = 1e-3;     // s
  double dt = 2e-8;        // s
  int sample_every = 25;   // record every N steps

  std::size_t n_particles = 100;
  // Physical atoms per macro-particle; absent -> n_atoms / n_particles.
  // When given explicitly, weight * n_particles must equal n_atoms.
  std::optional<double> weight;

  // Initial |alpha_-| noise floor; absent -> 1e-3 |alpha_+| / sqrt(n_particles).
  std::optional<double> probe_seed_amplitude;

  std::size_t sum_chunk = 64;    // phasor-sum reduction chunk (fixed order)
  double beat_window = 100e-6;   // s, window of the beat-frequency column

  std::vector<ScenarioEvent> events;  // sorted by time

  void validate() const;  // throws ValidationError
};

}  // namespace carl
