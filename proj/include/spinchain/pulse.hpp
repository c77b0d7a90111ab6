#pragma once

#include <string>
#include <vector>

#include "spinchain/chain.hpp"
#include "spinchain/state.hpp"

namespace spinchain {

/// One rectangular RF pulse addressing qubit `qubit` at the drive
/// frequency w_k + mu*J + nu*J'. The rotation angle is theta = rabi *
/// duration; theta = 0 is accepted and acts as the identity.
struct Pulse {
  int qubit = 0;
  int mu = 0;
  int nu = 0;
  double theta = 0.0;  ///< rotation angle in radians, >= 0
  double phi = 0.0;    ///< drive phase in radians
  double rabi = 0.0;   ///< Rabi frequency (angular), > 0

  double duration() const { return theta / rabi; }
  double drive_frequency(const ChainConfig& config) const;
};

/// Throws std::invalid_argument if the pulse cannot be bound to the
/// config: qubit out of range, (mu, nu) not realizable on that qubit,
/// theta < 0 or rabi <= 0.
void validate_pulse(const ChainConfig& config, const Pulse& pulse);

enum class BlockClass { resonant, near_resonant, far_resonant };

/// One 2x2 invariant subspace of a pulse on qubit k: the pair of basis
/// states differing in bit k only. Index 0 of a block is always the
/// bit-k-clear member.
struct TransitionBlock {
  int alpha0 = 0;      ///< member with bit k clear
  int alpha1 = 0;      ///< = alpha0 | (1 << k)
  double delta = 0.0;  ///< drive detuning of this pair
  BlockClass cls = BlockClass::far_resonant;
};

/// Detuning magnitude below which a pair counts as resonant for qubit k.
double resonance_tolerance(const ChainConfig& config, int k);

/// All 2^{n-1} bit-k pairs with their detunings, sorted by alpha0.
/// resonant: |delta| < resonance_tolerance; near-resonant: up to
/// 2 (J + J'); far-resonant beyond.
std::vector<TransitionBlock> classify_transitions(const ChainConfig& config, const Pulse& pulse);

/// Closed-form propagator of one driven pair with detuning `delta`,
/// Rabi frequency `rabi` and phase `phi`, evolved for time t. Row/column
/// 0 is the bit-k-clear member. Unitary for all arguments.
struct BlockUnitary {
  Complex m00, m01, m10, m11;
};

BlockUnitary block_propagator(double delta, double rabi, double phi, double t);

/// Resonant-transitions-only evolution: rotates exactly the resonant
/// pairs by theta, leaves every other amplitude untouched.
StateVector apply_ideal(const ChainConfig& config, const Pulse& pulse, const StateVector& state);

/// Block-diagonal evolution: resonant and near-resonant pairs evolve
/// under their detuned closed-form propagator; far-resonant pairs are
/// frozen. Exactly norm-preserving.
StateVector apply_block(const ChainConfig& config, const Pulse& pulse, const StateVector& state);

enum class PulseAngle { pi, half_pi };

/// Rabi frequency at which a spectator pair detuned by `delta` completes
/// whole 2*pi rotations during the pulse and ends with zero transition
/// probability: |delta| / sqrt(4k^2 - 1) for a pi-pulse,
/// |delta| / sqrt(16k^2 - 1) for a pi/2-pulse. Throws for delta == 0 or
/// k < 1.
double optimal_rabi(double delta, int k, PulseAngle angle);

/// An ordered pulse program bound to a chain. Pulses apply in list
/// order (index 0 first).
struct PulseSequence {
  ChainConfig config;
  std::vector<Pulse> pulses;
  std::string label;
};

void validate_sequence(const PulseSequence& sequence);
double total_duration(const PulseSequence& sequence);

/// Copy of `sequence` with every pulse's Rabi frequency set to `rabi`
/// (durations rescale accordingly).
PulseSequence with_rabi(const PulseSequence& sequence, double rabi);

}  // namespace spinchain
