#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "carl/ensemble.hpp"
#include "carl/params.hpp"

namespace carl {

// One sampled row of the measurement chain.
struct TimeSeriesRecord {
  double t = 0.0;                      // s
  std::complex<double> alpha_minus;    // probe amplitude
  double p_beat = 0.0;                 // W
  double p_probe_out = 0.0;            // W
  double bunching = 0.0;               // in [0, 1]
  double x_cm = 0.0;                   // m
  double v_cm = 0.0;                   // m/s
  std::optional<double> beat_freq;     // Hz, absent before enough samples
};

// P_beat = T hbar omega delta |alpha_+ + alpha_-|^2
double beat_power(std::complex<double> alpha_plus,
                  std::complex<double> alpha_minus, const SystemParams& p);

// b = N^-1 |sum_n weight e^{i phi_n}|; the weight cancels against N.
double bunching(const EnsembleState& ens);

// Means of phi_n/(2k) and u_n/k. Phases are kept unwrapped by the
// integrator, so the translation of the cloud is preserved.
struct CenterOfMass {
  double x;  // m
  double v;  // m/s
};
CenterOfMass center_of_mass(const EnsembleState& ens, double wavenumber);

// Unwrapped arg(alpha_-) of a record series; consecutive samples must be
// closer than pi apart in phase (sample fast enough for the beat).
std::vector<double> unwrap_phase(std::span<const TimeSeriesRecord> records);

// Instantaneous beat frequency per record from the least-squares slope of
// the unwrapped probe phase over a window centered on the record. Positive
// for a probe red of the pump. Absent where the window does not fit inside
// the series or holds fewer than two records.
std::vector<std::optional<double>> beat_frequency_phase_slope(
    std::span<const TimeSeriesRecord> records, double window);

// Beat frequency per record from mean-crossings of P_beat over a centered
// window: crossings / (2 window). Uses only the experimentally accessible
// beat power. Windows whose peak-to-peak P_beat excursion is below
// contrast_floor (in W) are flagged absent instead of returning 0.
std::vector<std::optional<double>> beat_frequency_zero_crossing(
    std::span<const TimeSeriesRecord> records, double window,
    double contrast_floor);

// Default low-contrast threshold: 1% of T hbar omega delta |alpha_+|^2.
double default_contrast_floor(const SystemParams& p);

// Mean/std of the beat-frequency column over the last quarter of a series;
// converged when std/mean < rel_tol and at least two values are present.
struct SteadyBeat {
  double mean = 0.0;   // Hz
  double stddev = 0.0; // Hz
  bool converged = false;
};
SteadyBeat steady_beat_summary(std::span<const TimeSeriesRecord> records,
                               double rel_tol = 0.05);

}  // namespace carl
