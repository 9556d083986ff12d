#include "carl/observables.hpp"

#include <algorithm>
#include <cmath>

#include "carl/errors.hpp"
#include "carl/fit.hpp"

namespace carl {

using constants::two_pi;

double beat_power(std::complex<double> alpha_plus,
                  std::complex<double> alpha_minus, const SystemParams& p) {
  return power_from_amplitude(alpha_plus + alpha_minus, p, /*outcoupled=*/true);
}

double bunching(const EnsembleState& ens) {
  if (ens.size() == 0) throw ValidationError("bunching: empty ensemble");
  std::complex<double> sum{0.0, 0.0};
  for (const double phi : ens.phases)
    sum += std::complex<double>(std::cos(phi), std::sin(phi));
  return std::abs(sum) / static_cast<double>(ens.size());
}

CenterOfMass center_of_mass(const EnsembleState& ens, double wavenumber) {
  if (ens.size() == 0) throw ValidationError("center_of_mass: empty ensemble");
  double phi_sum = 0.0, u_sum = 0.0;
  for (const double phi : ens.phases) phi_sum += phi;
  for (const double u : ens.scaled_velocities) u_sum += u;
  const double n = static_cast<double>(ens.size());
  return {phi_sum / n / (2.0 * wavenumber), u_sum / n / wavenumber};
}

std::vector<double> unwrap_phase(std::span<const TimeSeriesRecord> records) {
  std::vector<double> phase(records.size());
  if (records.empty()) return phase;
  phase[0] = std::arg(records[0].alpha_minus);
  for (std::size_t i = 1; i < records.size(); ++i) {
    const double step = std::remainder(
        std::arg(records[i].alpha_minus) - std::arg(records[i - 1].alpha_minus),
        two_pi);
    phase[i] = phase[i - 1] + step;
  }
  return phase;
}

namespace {

// Index range [lo, hi] of records whose t lies in [t_c - w/2, t_c + w/2].
// Returns false when the window does not fit inside the series.
bool window_bounds(std::span<const TimeSeriesRecord> records, std::size_t i,
                   double window, std::size_t& lo, std::size_t& hi) {
  const double half = window / 2.0;
  const double tc = records[i].t;
  const double eps = 1e-12 * std::max(1.0, std::abs(tc));
  if (tc - records.front().t < half - eps) return false;
  if (records.back().t - tc < half - eps) return false;
  lo = i;
  while (lo > 0 && records[lo - 1].t >= tc - half - eps) --lo;
  hi = i;
  while (hi + 1 < records.size() && records[hi + 1].t <= tc + half + eps) ++hi;
  return hi > lo;
}

}  // namespace

std::vector<std::optional<double>> beat_frequency_phase_slope(
    std::span<const TimeSeriesRecord> records, double window) {
  if (!(window > 0.0))
    throw ValidationError("beat_frequency_phase_slope: window must be > 0");
  std::vector<std::optional<double>> out(records.size());
  if (records.size() < 2) return out;
  const std::vector<double> phase = unwrap_phase(records);
  std::vector<double> ts(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) ts[i] = records[i].t;
  for (std::size_t i = 0; i < records.size(); ++i) {
    std::size_t lo = 0, hi = 0;
    if (!window_bounds(records, i, window, lo, hi)) continue;
    const std::size_t n = hi - lo + 1;
    const double slope =
        least_squares_slope(std::span(ts).subspan(lo, n),
                            std::span(phase).subspan(lo, n));
    // arg(alpha_-) advances at +2kv for a probe red of the locked pump.
    out[i] = slope / two_pi;
  }
  return out;
}

std::vector<std::optional<double>> beat_frequency_zero_crossing(
    std::span<const TimeSeriesRecord> records, double window,
    double contrast_floor) {
  if (!(window > 0.0))
    throw ValidationError("beat_frequency_zero_crossing: window must be > 0");
  std::vector<std::optional<double>> out(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    std::size_t lo = 0, hi = 0;
    if (!window_bounds(records, i, window, lo, hi)) continue;
    double mean = 0.0, pmin = records[lo].p_beat, pmax = records[lo].p_beat;
    for (std::size_t j = lo; j <= hi; ++j) {
      mean += records[j].p_beat;
      pmin = std::min(pmin, records[j].p_beat);
      pmax = std::max(pmax, records[j].p_beat);
    }
    mean /= static_cast<double>(hi - lo + 1);
    if (pmax - pmin < contrast_floor) continue;  // low contrast -> absent
    int crossings = 0;
    int prev_sign = 0;
    for (std::size_t j = lo; j <= hi; ++j) {
      const double d = records[j].p_beat - mean;
      const int sign = d > 0.0 ? 1 : (d < 0.0 ? -1 : prev_sign);
      if (prev_sign != 0 && sign != 0 && sign != prev_sign) ++crossings;
      if (sign != 0) prev_sign = sign;
    }
    out[i] = static_cast<double>(crossings) / (2.0 * window);
  }
  return out;
}

double default_contrast_floor(const SystemParams& p) {
  return 0.01 * power_from_amplitude(stationary_pump(p), p, /*outcoupled=*/true);
}

SteadyBeat steady_beat_summary(std::span<const TimeSeriesRecord> records,
                               double rel_tol) {
  SteadyBeat s;
  if (records.empty()) return s;
  const std::size_t start = records.size() - records.size() / 4;
  std::vector<double> vals;
  for (std::size_t i = start; i < records.size(); ++i)
    if (records[i].beat_freq) vals.push_back(*records[i].beat_freq);
  if (vals.size() < 2) return s;
  double mean = 0.0;
  for (const double v : vals) mean += v;
  mean /= static_cast<double>(vals.size());
  double var = 0.0;
  for (const double v : vals) var += (v - mean) * (v - mean);
  var /= static_cast<double>(vals.size());
  s.mean = mean;
  s.stddev = std::sqrt(var);
  s.converged = mean != 0.0 && s.stddev / std::abs(mean) < rel_tol;
  return s;
}

}  // namespace carl
