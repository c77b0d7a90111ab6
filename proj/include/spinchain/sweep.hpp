#pragma once

#include <vector>

#include "spinchain/engine.hpp"

namespace spinchain {

/// A Rabi-frequency scan of one pulse program: each point reruns the
/// sequence with every pulse rescaled to that Rabi frequency (durations
/// change accordingly) in both the full and the ideal engine.
struct SweepSpec {
  double omega_min = 0.0;
  double omega_max = 0.0;
  int points = 0;           ///< >= 2; uniform grid including both ends
  PulseSequence sequence;   ///< reference program; per-pulse rabi is overridden
  StateVector initial;
};

struct SweepPoint {
  double omega = 0.0;
  double fidelity = 0.0;  ///< |<psi_ideal|psi_full>|^2 at the end of the run
};

/// Runs the sweep. Points are independent and may execute on a worker
/// pool (`threads` > 0 forces the count; 0 consults the SPINCHAIN_THREADS
/// environment variable, then hardware concurrency). Results are in
/// ascending omega and bit-identical regardless of the thread count.
std::vector<SweepPoint> sweep_rabi(const SweepSpec& spec, const IntegratorSettings& settings,
                                   int threads = 0);

}  // namespace spinchain
