#include "spinchain/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace spinchain {

void validate_settings(const IntegratorSettings& settings) {
  if (settings.samples_per_period < 16)
    throw std::invalid_argument("samples_per_period must be >= 16");
  if (!(settings.convergence_tol > 0.0))
    throw std::invalid_argument("convergence_tol must be positive");
  if (settings.trace_stride < 0) throw std::invalid_argument("trace_stride must be >= 0");
  if (settings.trace_samples_per_pulse < 0)
    throw std::invalid_argument("trace_samples_per_pulse must be >= 0");
}

namespace {

// Coupling layout of one pulse: every bit flip (a, a|2^k) appears once,
// tagged with an index into the table of distinct detunings. For a fixed
// drive there are at most 9 detuning values per qubit, so phases are
// computed per class, not per pair.
struct CouplingPlan {
  struct Pair {
    int low, high;   // basis indices, bit k clear / set
    int cls;         // detuning class
  };
  std::vector<Pair> pairs;
  std::vector<double> deltas;  // distinct detuning per class
  double delta_max = 0.0;
};

CouplingPlan build_plan(const ChainConfig& config, const Pulse& pulse) {
  const double w = pulse.drive_frequency(config);
  CouplingPlan plan;
  plan.pairs.reserve(static_cast<std::size_t>(config.n) * (dimension(config) / 2));
  for (int k = 0; k < config.n; ++k) {
    for (int alpha = 0; alpha < dimension(config); ++alpha) {
      if (qubit_bit(alpha, k)) continue;
      const double delta = detuning(config, w, k, alpha);
      int cls = -1;
      for (std::size_t c = 0; c < plan.deltas.size(); ++c)
        if (plan.deltas[c] == delta) {
          cls = static_cast<int>(c);
          break;
        }
      if (cls < 0) {
        cls = static_cast<int>(plan.deltas.size());
        plan.deltas.push_back(delta);
      }
      plan.pairs.push_back({alpha, alpha | (1 << k), cls});
    }
  }
  for (double d : plan.deltas) plan.delta_max = std::max(plan.delta_max, std::abs(d));
  return plan;
}

// dD/dt for the interaction-picture amplitudes: every pair (a, b) with
// bit k flipped couples through i*(rabi/2)*e^{+-i(delta t + phi)}. The
// per-class factor u = (rabi/2) * e^{i(delta t + phi)} is precomputed.
void derivative(const CouplingPlan& plan, const std::vector<Complex>& u,
                const std::vector<Complex>& y, std::vector<Complex>& dy) {
  std::fill(dy.begin(), dy.end(), Complex{0.0, 0.0});
  for (const auto& pair : plan.pairs) {
    const Complex f = u[pair.cls];
    const Complex zl = f * y[pair.high];          //  u * D_high
    const Complex zh = std::conj(f) * y[pair.low];
    dy[pair.low] += Complex{-zl.imag(), zl.real()};   // i * u * D_high
    dy[pair.high] += Complex{-zh.imag(), zh.real()};  // i * conj(u) * D_low
  }
}

// Phase table at half-step resolution, advanced by complex rotors and
// periodically resynchronized against sin/cos to cap round-off drift.
class PhaseTable {
 public:
  PhaseTable(const CouplingPlan& plan, double base_magnitude, double phi, double half_step)
      : deltas_(plan.deltas), half_step_(half_step), base_(std::polar(base_magnitude, phi)) {
    const std::size_t classes = deltas_.size();
    rotor_.resize(classes);
    step_factor_.resize(classes);
    value_.resize(classes);
    for (std::size_t c = 0; c < classes; ++c)
      step_factor_[c] = std::polar(1.0, deltas_[c] * half_step_);
    resync();
  }

  const std::vector<Complex>& values() const { return value_; }

  void advance_half_step() {
    ++index_;
    if (index_ % kResyncInterval == 0) {
      resync();
      return;
    }
    for (std::size_t c = 0; c < rotor_.size(); ++c) {
      rotor_[c] *= step_factor_[c];
      value_[c] = base_ * rotor_[c];
    }
  }

 private:
  static constexpr long kResyncInterval = 4096;

  void resync() {
    const double t = static_cast<double>(index_) * half_step_;
    for (std::size_t c = 0; c < rotor_.size(); ++c) {
      rotor_[c] = std::polar(1.0, deltas_[c] * t);
      value_[c] = base_ * rotor_[c];
    }
  }

  std::vector<double> deltas_;
  double half_step_;
  Complex base_;
  long index_ = 0;
  std::vector<Complex> rotor_;
  std::vector<Complex> step_factor_;
  std::vector<Complex> value_;
};

int trace_stride_for(const IntegratorSettings& settings, long steps) {
  if (settings.trace_stride > 0) return settings.trace_stride;
  if (settings.trace_samples_per_pulse == 0) return 0;  // tracing disabled
  return static_cast<int>(std::max<long>(1, steps / settings.trace_samples_per_pulse));
}

}  // namespace

EvolveResult evolve_full(const ChainConfig& config, const Pulse& pulse,
                         const StateVector& state, const IntegratorSettings& settings,
                         const StateVector* ideal_reference) {
  validate_settings(settings);
  validate_pulse(config, pulse);
  if (state.n != config.n) throw std::invalid_argument("state size does not match chain");

  EvolveResult result;
  result.state = state;
  if (pulse.theta == 0.0) return result;

  const CouplingPlan plan = build_plan(config, pulse);
  const double tau = pulse.duration();
  // The fastest phase in the system sets the resolution; the Rabi
  // frequency is the floor for (artificial) configs where it dominates.
  const double fastest = std::max(plan.delta_max, pulse.rabi);
  const double nominal_dt = (2.0 * std::numbers::pi / fastest) / settings.samples_per_period;
  const long steps = std::max<long>(1, static_cast<long>(std::ceil(tau / nominal_dt)));
  const double h = tau / static_cast<double>(steps);
  if (!(h > 0.0)) throw std::runtime_error("integration step underflow");

  PhaseTable phases(plan, 0.5 * pulse.rabi, pulse.phi, 0.5 * h);

  const std::size_t dim = state.amps.size();
  std::vector<Complex> y = state.amps;
  std::vector<Complex> k1(dim), k2(dim), k3(dim), k4(dim), work(dim);

  const int stride = ideal_reference ? trace_stride_for(settings, steps) : 0;

  for (long s = 0; s < steps; ++s) {
    derivative(plan, phases.values(), y, k1);
    for (std::size_t i = 0; i < dim; ++i) work[i] = y[i] + (0.5 * h) * k1[i];
    phases.advance_half_step();
    derivative(plan, phases.values(), work, k2);
    for (std::size_t i = 0; i < dim; ++i) work[i] = y[i] + (0.5 * h) * k2[i];
    derivative(plan, phases.values(), work, k3);
    for (std::size_t i = 0; i < dim; ++i) work[i] = y[i] + h * k3[i];
    phases.advance_half_step();
    derivative(plan, phases.values(), work, k4);
    for (std::size_t i = 0; i < dim; ++i)
      y[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

    if (stride > 0 && ((s + 1) % stride == 0 || s + 1 == steps)) {
      const bool last = (s + 1 == steps);
      const double t = last ? tau : static_cast<double>(s + 1) * h;
      Pulse partial = pulse;
      partial.theta = last ? pulse.theta : pulse.rabi * t;
      const StateVector reference = apply_ideal(config, partial, *ideal_reference);
      StateVector current;
      current.n = state.n;
      current.amps = y;
      result.trace.samples.push_back({t, fidelity(reference, current), 0});
    }
  }

  const double drift = std::abs([&] {
    double acc = 0.0;
    for (const Complex& c : y) acc += std::norm(c);
    return acc;
  }() - 1.0);
  if (drift > 1e-6) {
    std::ostringstream msg;
    msg << "integration diverged: norm drift " << drift << " after " << steps
        << " steps (qubit " << pulse.qubit << ", mu=" << pulse.mu << ", nu=" << pulse.nu
        << ", theta=" << pulse.theta << ", rabi=" << pulse.rabi << ")";
    throw std::runtime_error(msg.str());
  }

  result.state.amps = std::move(y);
  return result;
}

RunResult run_sequence(const PulseSequence& sequence, const StateVector& initial,
                       EvolutionMode mode, const IntegratorSettings& settings) {
  validate_settings(settings);
  validate_sequence(sequence);
  require_normalized(initial);
  if (initial.n != sequence.config.n)
    throw std::invalid_argument("initial state size does not match chain");

  RunResult result;
  result.state = initial;

  if (mode != EvolutionMode::full) {
    for (const Pulse& pulse : sequence.pulses)
      result.state = (mode == EvolutionMode::block)
                         ? apply_block(sequence.config, pulse, result.state)
                         : apply_ideal(sequence.config, pulse, result.state);
    return result;
  }

  StateVector reference = initial;
  const bool tracing = settings.trace_samples_per_pulse > 0 || settings.trace_stride > 0;
  if (tracing && !sequence.pulses.empty())
    result.trace.samples.push_back({0.0, fidelity(reference, result.state), 0});

  double t_offset = 0.0;
  for (std::size_t i = 0; i < sequence.pulses.size(); ++i) {
    const Pulse& pulse = sequence.pulses[i];
    EvolveResult step = evolve_full(sequence.config, pulse, result.state, settings,
                                    tracing ? &reference : nullptr);
    result.state = std::move(step.state);
    for (const TraceSample& sample : step.trace.samples)
      result.trace.samples.push_back(
          {t_offset + sample.t, sample.fidelity, static_cast<int>(i)});
    reference = apply_ideal(sequence.config, pulse, reference);
    t_offset += pulse.duration();
  }
  return result;
}

double convergence_check(const PulseSequence& sequence, const StateVector& initial,
                         const IntegratorSettings& settings) {
  IntegratorSettings coarse = settings;
  coarse.trace_samples_per_pulse = 0;
  coarse.trace_stride = 0;
  IntegratorSettings fine = coarse;
  fine.samples_per_period = 2 * coarse.samples_per_period;

  const RunResult a = run_sequence(sequence, initial, EvolutionMode::full, coarse);
  const RunResult b = run_sequence(sequence, initial, EvolutionMode::full, fine);
  double max_diff = 0.0;
  for (int i = 0; i < a.state.dim(); ++i)
    max_diff = std::max(max_diff, std::abs(a.state.amps[i] - b.state.amps[i]));
  return max_diff;
}

}  // namespace spinchain
