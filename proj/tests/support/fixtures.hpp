#pragma once

#include "spinchain/engine.hpp"
#include "spinchain/protocols.hpp"

namespace spinchain::testing {

/// The 4-qubit operating point used by the built-in programs.
inline const ChainConfig& reference_config() {
  static const ChainConfig config{4, {100.0, 200.0, 400.0, 800.0}, 10.0, 0.4};
  return config;
}

/// One full-engine factorization run at rabi = 0.1, shared across test
/// cases (the integration takes a few seconds).
inline const RunResult& shor_full_run() {
  static const RunResult run = [] {
    return run_sequence(shor4_sequence(reference_config(), 0.1), StateVector::basis(4, 0),
                        EvolutionMode::full, IntegratorSettings{});
  }();
  return run;
}

inline const StateVector& shor_ideal_final() {
  static const StateVector state = [] {
    return run_sequence(shor4_sequence(reference_config(), 0.1), StateVector::basis(4, 0),
                        EvolutionMode::ideal, IntegratorSettings{})
        .state;
  }();
  return state;
}

inline double linf_distance(const StateVector& a, const StateVector& b) {
  double out = 0.0;
  for (int i = 0; i < a.dim(); ++i) out = std::max(out, std::abs(a.amps[i] - b.amps[i]));
  return out;
}

}  // namespace spinchain::testing
