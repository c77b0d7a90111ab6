#pragma once

#include <array>
#include <complex>

#include "spinchain/pulse.hpp"
#include "spinchain/state.hpp"

namespace spinchain {

/// The 12-pulse factorization-of-4 program (3 half-pi pulses for the
/// input superposition, 4 pi-pulses for the modular-exponentiation
/// encoding, 5 pi-pulses for the inverse Fourier transform on the input
/// register). Requires n == 4; every pulse uses `rabi`.
PulseSequence shor4_sequence(const ChainConfig& config, double rabi);

/// The 7-pulse teleportation program on a 4-spin chain (3 pulses for the
/// Bell pair between qubits 2 and 0, 2 for the controlled-not of qubit 2
/// on qubit 3, 2 for the final basis-change rotation of qubit 3).
/// Requires n == 4; every pulse uses `rabi`.
PulseSequence teleport_sequence(const ChainConfig& config, double rabi);

/// The exact milestone states of the factorization program started from
/// |0000>: after the superposition step, after the function evaluation,
/// and after the inverse Fourier transform.
std::array<StateVector, 3> shor4_ideal_states();

/// Outcome distribution of the 2-qubit input register (qubits 3 and 2)
/// after tracing out qubits 1 and 0, plus the period read off from the
/// spacing of the probability peaks (threshold 0.1).
struct MeasurementReport {
  std::array<double, 4> x_probs{};  ///< indexed by x = 2*i3 + i2
  int inferred_period = 0;
};

MeasurementReport x_register_probabilities(const StateVector& state);

/// One post-selected branch of the teleportation readout.
struct TeleportBranch {
  int outcome = 0;                     ///< Alice's result, 2*i3 + i2
  double probability = 0.0;
  bool empty = false;                  ///< probability below 1e-12; no state extracted
  double qubit1_zero_population = 0.0; ///< weight of qubit 1 in |0> within the branch
  Complex bob0, bob1;                  ///< Bob's corrected qubit-0 amplitudes
  double overlap = 0.0;                ///< |<phi_x|corrected>|^2
};

struct TeleportReport {
  std::array<TeleportBranch, 4> branches;
};

/// Projects `state` onto each of Alice's outcomes (qubits 3 and 2),
/// renormalizes, applies Bob's outcome-dependent correction (identity,
/// bit flip, -sigma_z, or bit flip after sigma_z) to qubit 0 and reports
/// the overlap with the transported state c0|0> + c1|1>. Neither Alice's
/// nor Bob's processing depends on (c0, c1).
TeleportReport teleport_verify(const StateVector& state, Complex c0, Complex c1);

}  // namespace spinchain
