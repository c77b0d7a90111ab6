#pragma once

#include <vector>

#include "spinchain/pulse.hpp"

namespace spinchain {

/// Controls for the fixed-step integrator and the fidelity trace.
/// The step size during a pulse is (2*pi / delta_max) / samples_per_period
/// where delta_max is the largest detuning magnitude of any qubit and
/// basis state for that pulse's drive frequency.
struct IntegratorSettings {
  int samples_per_period = 64;      ///< >= 16
  int trace_stride = 0;             ///< record every Nth step; 0 = derive from trace_samples_per_pulse
  double convergence_tol = 1e-8;    ///< budget for the step-halving self-check
  int trace_samples_per_pulse = 200;  ///< 0 disables tracing
};

void validate_settings(const IntegratorSettings& settings);

struct TraceSample {
  double t = 0.0;
  double fidelity = 0.0;
  int pulse_index = 0;
};

/// Sampled F(t) against the co-evolved ideal reference, cumulative time,
/// strictly increasing t.
struct FidelityTrace {
  std::vector<TraceSample> samples;
};

struct EvolveResult {
  StateVector state;
  FidelityTrace trace;  // times relative to pulse start
};

/// Integrates the interaction-picture Schrodinger equation for one pulse
/// with a classical 4th-order fixed-step scheme. All n drive terms are
/// kept, far-resonant ones included. If `ideal_reference` (the ideal
/// state at pulse start) is given, the trace records F(t) against the
/// reference rotated by the partial angle rabi * t.
/// Throws std::runtime_error if the norm drifts by more than 1e-6.
EvolveResult evolve_full(const ChainConfig& config, const Pulse& pulse,
                         const StateVector& state, const IntegratorSettings& settings,
                         const StateVector* ideal_reference = nullptr);

enum class EvolutionMode { full, block, ideal };

struct RunResult {
  StateVector state;
  FidelityTrace trace;  // empty unless mode == full
};

/// Folds the chosen engine over the sequence in application order. In
/// full mode an ideal reference is co-evolved and F(t) is traced with
/// pulse boundaries marked by pulse_index.
RunResult run_sequence(const PulseSequence& sequence, const StateVector& initial,
                       EvolutionMode mode, const IntegratorSettings& settings = {});

/// Step-halving self-check: reruns `sequence` in full mode with doubled
/// samples_per_period and returns the max amplitude difference against
/// the run at `settings`. Callers compare against convergence_tol.
double convergence_check(const PulseSequence& sequence, const StateVector& initial,
                         const IntegratorSettings& settings);

}  // namespace spinchain
