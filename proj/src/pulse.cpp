#include "spinchain/pulse.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinchain {

double Pulse::drive_frequency(const ChainConfig& config) const {
  return config.larmor[qubit] + mu * config.j1 + nu * config.j2;
}

void validate_pulse(const ChainConfig& config, const Pulse& pulse) {
  if (pulse.qubit < 0 || pulse.qubit >= config.n)
    throw std::invalid_argument("pulse qubit out of range: " + std::to_string(pulse.qubit));
  if (!allowed_offsets(config, pulse.qubit).contains(pulse.mu, pulse.nu))
    throw std::invalid_argument("offsets (mu=" + std::to_string(pulse.mu) +
                                ", nu=" + std::to_string(pulse.nu) +
                                ") are not realizable on qubit " + std::to_string(pulse.qubit));
  if (!(pulse.theta >= 0.0)) throw std::invalid_argument("pulse angle must be >= 0");
  if (!(pulse.rabi > 0.0)) throw std::invalid_argument("Rabi frequency must be positive");
}

double resonance_tolerance(const ChainConfig& config, int k) {
  return 1e-9 * config.larmor[k];
}

std::vector<TransitionBlock> classify_transitions(const ChainConfig& config, const Pulse& pulse) {
  validate_pulse(config, pulse);
  const double w = pulse.drive_frequency(config);
  const double tol = resonance_tolerance(config, pulse.qubit);
  const double near_max = 2.0 * (config.j1 + config.j2);
  const int k = pulse.qubit;

  std::vector<TransitionBlock> blocks;
  blocks.reserve(dimension(config) / 2);
  for (int alpha = 0; alpha < dimension(config); ++alpha) {
    if (qubit_bit(alpha, k)) continue;
    TransitionBlock block;
    block.alpha0 = alpha;
    block.alpha1 = alpha | (1 << k);
    block.delta = detuning(config, w, k, alpha);
    const double mag = std::abs(block.delta);
    if (mag < tol)
      block.cls = BlockClass::resonant;
    else if (mag <= near_max + tol)  // the boundary case is a coupling-induced shift
      block.cls = BlockClass::near_resonant;
    else
      block.cls = BlockClass::far_resonant;
    blocks.push_back(block);
  }
  return blocks;
}

BlockUnitary block_propagator(double delta, double rabi, double phi, double t) {
  if (!(rabi > 0.0)) throw std::invalid_argument("Rabi frequency must be positive");
  if (t < 0.0) throw std::invalid_argument("negative evolution time");
  const double eff = std::sqrt(rabi * rabi + delta * delta);
  const double half = 0.5 * eff * t;
  const double c = std::cos(half);
  const double s = std::sin(half);
  const Complex rot_plus = std::polar(1.0, 0.5 * delta * t);

  BlockUnitary u;
  u.m00 = rot_plus * Complex{c, -(delta / eff) * s};
  u.m01 = rot_plus * Complex{0.0, (rabi / eff) * s} * std::polar(1.0, phi);
  u.m10 = std::conj(rot_plus) * Complex{0.0, (rabi / eff) * s} * std::polar(1.0, -phi);
  u.m11 = std::conj(rot_plus) * Complex{c, (delta / eff) * s};
  return u;
}

namespace {

StateVector apply_blockwise(const ChainConfig& config, const Pulse& pulse,
                            const StateVector& state, bool near_resonant_too) {
  if (state.n != config.n) throw std::invalid_argument("state size does not match chain");
  StateVector out = state;
  if (pulse.theta == 0.0) {
    validate_pulse(config, pulse);
    return out;
  }
  const double tau = pulse.duration();
  for (const TransitionBlock& block : classify_transitions(config, pulse)) {
    BlockUnitary u;
    if (block.cls == BlockClass::resonant) {
      u = block_propagator(0.0, pulse.rabi, pulse.phi, tau);
    } else if (near_resonant_too && block.cls == BlockClass::near_resonant) {
      u = block_propagator(block.delta, pulse.rabi, pulse.phi, tau);
    } else {
      continue;
    }
    const Complex a0 = out.amps[block.alpha0];
    const Complex a1 = out.amps[block.alpha1];
    out.amps[block.alpha0] = u.m00 * a0 + u.m01 * a1;
    out.amps[block.alpha1] = u.m10 * a0 + u.m11 * a1;
  }
  return out;
}

}  // namespace

StateVector apply_ideal(const ChainConfig& config, const Pulse& pulse, const StateVector& state) {
  return apply_blockwise(config, pulse, state, false);
}

StateVector apply_block(const ChainConfig& config, const Pulse& pulse, const StateVector& state) {
  return apply_blockwise(config, pulse, state, true);
}

double optimal_rabi(double delta, int k, PulseAngle angle) {
  if (delta == 0.0) throw std::invalid_argument("delta = 0: nothing to suppress");
  if (k < 1) throw std::invalid_argument("revolution count k must be >= 1");
  const double n = (angle == PulseAngle::pi) ? 2.0 * k : 4.0 * k;
  return std::abs(delta) / std::sqrt(n * n - 1.0);
}

void validate_sequence(const PulseSequence& sequence) {
  validate_config(sequence.config);
  for (const Pulse& pulse : sequence.pulses) validate_pulse(sequence.config, pulse);
}

double total_duration(const PulseSequence& sequence) {
  double total = 0.0;
  for (const Pulse& pulse : sequence.pulses) total += pulse.duration();
  return total;
}

PulseSequence with_rabi(const PulseSequence& sequence, double rabi) {
  PulseSequence out = sequence;
  for (Pulse& pulse : out.pulses) pulse.rabi = rabi;
  return out;
}

}  // namespace spinchain
