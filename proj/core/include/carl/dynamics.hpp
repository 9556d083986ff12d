#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "carl/ensemble.hpp"
#include "carl/observables.hpp"
#include "carl/params.hpp"
#include "carl/scenario.hpp"

namespace carl {

// Full coupled state: one complex probe amplitude plus the macro-particle
// ensemble. The probe lives in the frame rotating at the locked pump.
struct SimState {
  std::complex<double> alpha_minus;
  EnsembleState ensemble;
};

struct SimDerivs {
  std::complex<double> dalpha;
  std::vector<double> dphase;     // dphi_n/dt = 2 u_n
  std::vector<double> dvelocity;  // du_n/dt
};

// Coefficients of the equations of motion:
//   dalpha_-/dt = -chi alpha_- + eta_-  - (i U0 eta_+/chi) sum_n w e^{i phi_n}
//   du_n/dt     = -4 eps U0 eta_+ Im[(alpha_-/chi*) e^{-i phi_n}] - gamma u_n
// The Im[] form is algebraically identical to the two-term commutator form
// of the light force; the bracket is purely imaginary, so du_n/dt is real.
// eta_minus and gamma_fric are the only members scenario events may change.
struct RhsContext {
  std::complex<double> chi;
  std::complex<double> source_coeff;    // -i U0 eta_+ / chi
  std::complex<double> inv_chi_conj;    // 1 / conj(chi)
  double force_coeff;                   // -4 epsilon U0 eta_+
  double eta_minus;
  double gamma_fric;
  std::size_t sum_chunk;
};

RhsContext make_rhs_context(const SystemParams& p, std::size_t sum_chunk = 64);

// weight * sum_n e^{i phi_n}, reduced in fixed-size chunks with a fixed
// summation order so results are bit-reproducible for a given chunk size.
std::complex<double> weighted_phasor_sum(std::span<const double> phases,
                                         double weight, std::size_t chunk);

void eval_rhs(const RhsContext& ctx, const SimState& s, SimDerivs& out);

// Allocating convenience wrapper.
SimDerivs rhs(const SimState& s, const SystemParams& p,
              std::size_t sum_chunk = 64);

// Classical fixed-step RK4 on the full coupled system; deterministic, no
// allocation per step. Throws BlowupError when the advanced state contains
// a non-finite component (the reported time is t + dt).
class Rk4Stepper {
 public:
  explicit Rk4Stepper(std::size_t n_particles);
  void step(SimState& s, double t, double dt, const RhsContext& ctx);

 private:
  SimDerivs k1_, k2_, k3_, k4_;
  SimState work_;
};

// Single-step convenience wrapper.
SimState step(const SimState& s, const SystemParams& p, double dt,
              std::size_t sum_chunk = 64);

struct RunResult {
  std::vector<TimeSeriesRecord> records;
  std::vector<std::string> warnings;
};

// Integrates the scenario: samples the initial ensemble, seeds the probe
// (symmetric steady state eta_-/chi when eta_- != 0, plus a random-phase
// noise floor), applies events at their snapped steps, records observables
// every sample_every steps, and fills the beat-frequency column by the
// phase-slope estimator over cfg.beat_window. Deterministic per (cfg, p).
RunResult run_scenario(const ScenarioConfig& cfg, const SystemParams& p);

}  // namespace carl
