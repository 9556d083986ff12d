#include "carl/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "carl/errors.hpp"

namespace carl {

using constants::two_pi;

RhsContext make_rhs_context(const SystemParams& p, std::size_t sum_chunk) {
  RhsContext ctx;
  ctx.chi = susceptibility(p);
  ctx.source_coeff =
      std::complex<double>(0.0, -1.0) * p.u0 * p.eta_plus / ctx.chi;
  ctx.inv_chi_conj = 1.0 / std::conj(ctx.chi);
  ctx.force_coeff = -4.0 * recoil_parameter(p) * p.u0 * p.eta_plus;
  ctx.eta_minus = p.eta_minus;
  ctx.gamma_fric = p.gamma_fric;
  ctx.sum_chunk = sum_chunk == 0 ? 1 : sum_chunk;
  return ctx;
}

std::complex<double> weighted_phasor_sum(std::span<const double> phases,
                                         double weight, std::size_t chunk) {
  if (chunk == 0) chunk = 1;
  std::complex<double> total{0.0, 0.0};
  for (std::size_t base = 0; base < phases.size(); base += chunk) {
    const std::size_t end = std::min(base + chunk, phases.size());
    std::complex<double> part{0.0, 0.0};
    for (std::size_t i = base; i < end; ++i)
      part += std::complex<double>(std::cos(phases[i]), std::sin(phases[i]));
    total += part;
  }
  return weight * total;
}

void eval_rhs(const RhsContext& ctx, const SimState& s, SimDerivs& out) {
  const std::size_t n = s.ensemble.size();
  out.dphase.resize(n);
  out.dvelocity.resize(n);

  // h = alpha_- / chi*; the force on particle n is force_coeff * Im[h e^{-i phi_n}].
  const std::complex<double> h = s.alpha_minus * ctx.inv_chi_conj;
  const double h_re = h.real(), h_im = h.imag();

  std::complex<double> total{0.0, 0.0};
  const std::size_t chunk = ctx.sum_chunk;
  for (std::size_t base = 0; base < n; base += chunk) {
    const std::size_t end = std::min(base + chunk, n);
    std::complex<double> part{0.0, 0.0};
    for (std::size_t i = base; i < end; ++i) {
      const double c = std::cos(s.ensemble.phases[i]);
      const double d = std::sin(s.ensemble.phases[i]);
      part += std::complex<double>(c, d);
      // Im[h * (c - i d)] = h_im * c - h_re * d
      out.dvelocity[i] = ctx.force_coeff * (h_im * c - h_re * d) -
                         ctx.gamma_fric * s.ensemble.scaled_velocities[i];
      out.dphase[i] = 2.0 * s.ensemble.scaled_velocities[i];
    }
    total += part;
  }
  out.dalpha = -ctx.chi * s.alpha_minus + ctx.eta_minus +
               ctx.source_coeff * (s.ensemble.weight * total);
}

SimDerivs rhs(const SimState& s, const SystemParams& p,
              std::size_t sum_chunk) {
  SimDerivs d;
  eval_rhs(make_rhs_context(p, sum_chunk), s, d);
  return d;
}

namespace {

void resize_derivs(SimDerivs& d, std::size_t n) {
  d.dphase.resize(n);
  d.dvelocity.resize(n);
}

// work = s + dt * k
void advance_into(const SimState& s, const SimDerivs& k, double dt,
                  SimState& work) {
  const std::size_t n = s.ensemble.size();
  work.alpha_minus = s.alpha_minus + dt * k.dalpha;
  work.ensemble.weight = s.ensemble.weight;
  work.ensemble.phases.resize(n);
  work.ensemble.scaled_velocities.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    work.ensemble.phases[i] = s.ensemble.phases[i] + dt * k.dphase[i];
    work.ensemble.scaled_velocities[i] =
        s.ensemble.scaled_velocities[i] + dt * k.dvelocity[i];
  }
}

bool state_finite(const SimState& s) {
  if (!std::isfinite(s.alpha_minus.real()) ||
      !std::isfinite(s.alpha_minus.imag()))
    return false;
  for (const double phi : s.ensemble.phases)
    if (!std::isfinite(phi)) return false;
  for (const double u : s.ensemble.scaled_velocities)
    if (!std::isfinite(u)) return false;
  return true;
}

}  // namespace

Rk4Stepper::Rk4Stepper(std::size_t n_particles) {
  resize_derivs(k1_, n_particles);
  resize_derivs(k2_, n_particles);
  resize_derivs(k3_, n_particles);
  resize_derivs(k4_, n_particles);
}

void Rk4Stepper::step(SimState& s, double t, double dt, const RhsContext& ctx) {
  const std::size_t n = s.ensemble.size();
  eval_rhs(ctx, s, k1_);
  advance_into(s, k1_, dt / 2.0, work_);
  eval_rhs(ctx, work_, k2_);
  advance_into(s, k2_, dt / 2.0, work_);
  eval_rhs(ctx, work_, k3_);
  advance_into(s, k3_, dt, work_);
  eval_rhs(ctx, work_, k4_);

  const double w = dt / 6.0;
  s.alpha_minus +=
      w * (k1_.dalpha + 2.0 * k2_.dalpha + 2.0 * k3_.dalpha + k4_.dalpha);
  for (std::size_t i = 0; i < n; ++i) {
    s.ensemble.phases[i] += w * (k1_.dphase[i] + 2.0 * k2_.dphase[i] +
                                 2.0 * k3_.dphase[i] + k4_.dphase[i]);
    s.ensemble.scaled_velocities[i] +=
        w * (k1_.dvelocity[i] + 2.0 * k2_.dvelocity[i] +
             2.0 * k3_.dvelocity[i] + k4_.dvelocity[i]);
  }
  if (!state_finite(s)) {
    std::ostringstream msg;
    msg << "integration blew up at t = " << t + dt << " s";
    throw BlowupError(msg.str(), t + dt);
  }
}

SimState step(const SimState& s, const SystemParams& p, double dt,
              std::size_t sum_chunk) {
  SimState out = s;
  Rk4Stepper stepper(s.ensemble.size());
  stepper.step(out, 0.0, dt, make_rhs_context(p, sum_chunk));
  return out;
}

RunResult run_scenario(const ScenarioConfig& cfg, const SystemParams& p) {
  cfg.validate();
  p.validate();
  const DerivedParams d = derive(p);

  RunResult result;
  Rng rng(cfg.seed);

  SimState s;
  s.ensemble = sample_initial(cfg, p, rng);

  // Probe start: the symmetric steady state when the reverse pump is on
  // (switch-off pre-history), plus a random-phase noise floor standing in
  // for mirror backscatter.
  const double auto_seed =
      1e-3 * std::abs(d.alpha_plus) /
      std::sqrt(static_cast<double>(cfg.n_particles));
  const double seed_amp = cfg.probe_seed_amplitude.value_or(auto_seed);
  s.alpha_minus = std::polar(seed_amp, two_pi * rng.uniform());
  if (p.eta_minus != 0.0) s.alpha_minus += p.eta_minus / d.chi;

  const long long n_steps = std::llround(cfg.t_end / cfg.dt);
  if (n_steps < 1) throw ValidationError("scenario: t_end shorter than dt");

  // Events snap to the nearest step and apply before that step.
  struct SnappedEvent {
    long long step;
    EventKind kind;
    double value;
  };
  std::vector<SnappedEvent> events;
  events.reserve(cfg.events.size());
  for (const ScenarioEvent& ev : cfg.events) {
    long long idx = std::llround(ev.time / cfg.dt);
    if (idx < 0) idx = 0;
    if (idx > n_steps) idx = n_steps;
    events.push_back({idx, ev.kind, ev.value});
  }

  SystemParams run_p = p;
  RhsContext ctx = make_rhs_context(run_p, cfg.sum_chunk);
  Rk4Stepper stepper(cfg.n_particles);

  const double alpha_plus_mag = std::abs(d.alpha_plus);
  bool warned_magnitude = false;
  std::size_t next_event = 0;

  for (long long i = 0; i <= n_steps; ++i) {
    const double t = static_cast<double>(i) * cfg.dt;
    while (next_event < events.size() && events[next_event].step == i) {
      const SnappedEvent& ev = events[next_event];
      if (ev.kind == EventKind::set_eta_minus)
        run_p.eta_minus = ev.value;
      else
        run_p.gamma_fric = ev.value;
      ctx.eta_minus = run_p.eta_minus;
      ctx.gamma_fric = run_p.gamma_fric;
      ++next_event;
    }

    if (i % cfg.sample_every == 0 || i == n_steps) {
      TimeSeriesRecord rec;
      rec.t = t;
      rec.alpha_minus = s.alpha_minus;
      rec.p_beat = beat_power(d.alpha_plus, s.alpha_minus, p);
      rec.p_probe_out = power_from_amplitude(s.alpha_minus, p, true);
      rec.bunching = bunching(s.ensemble);
      const CenterOfMass cm = center_of_mass(s.ensemble, d.k);
      rec.x_cm = cm.x;
      rec.v_cm = cm.v;
      result.records.push_back(rec);

      if (!warned_magnitude && alpha_plus_mag > 0.0 &&
          std::abs(s.alpha_minus) > 10.0 * alpha_plus_mag) {
        std::ostringstream msg;
        msg << "t = " << t << " s: |alpha_minus| = " << std::abs(s.alpha_minus)
            << " exceeds 10 |alpha_plus| = " << 10.0 * alpha_plus_mag
            << " (possible integration blowup)";
        result.warnings.push_back(msg.str());
        warned_magnitude = true;
      }
    }

    if (i == n_steps) break;
    stepper.step(s, t, cfg.dt, ctx);
  }

  const auto freqs = beat_frequency_phase_slope(result.records, cfg.beat_window);
  for (std::size_t i = 0; i < freqs.size(); ++i)
    result.records[i].beat_freq = freqs[i];
  return result;
}

}  // namespace carl
