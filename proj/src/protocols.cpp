#include "spinchain/protocols.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace spinchain {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;

void require_four_qubits(int n, const char* what) {
  if (n != 4) throw std::invalid_argument(std::string(what) + " requires a 4-qubit chain");
}

PulseSequence make_sequence(const ChainConfig& config, double rabi, std::string label,
                            std::vector<Pulse> pulses) {
  PulseSequence sequence;
  sequence.config = config;
  sequence.label = std::move(label);
  sequence.pulses = std::move(pulses);
  for (Pulse& pulse : sequence.pulses) pulse.rabi = rabi;
  validate_sequence(sequence);
  return sequence;
}

}  // namespace

PulseSequence shor4_sequence(const ChainConfig& config, double rabi) {
  require_four_qubits(config.n, "shor4_sequence");
  // Application order; {qubit, mu, nu, theta, phi}.
  return make_sequence(config, rabi, "shor4",
                       {
                           // uniform superposition of the input register
                           {2, 2, 1, kHalfPi, kHalfPi},
                           {3, 1, 1, kHalfPi, kHalfPi},
                           {3, -1, 1, kHalfPi, kHalfPi},
                           // y <- 3^x mod 4
                           {0, 1, 1, kPi, kHalfPi},
                           {0, 1, -1, kPi, kHalfPi},
                           {1, -2, 1, kPi, kHalfPi},
                           {1, -2, -1, kPi, kHalfPi},
                           // inverse Fourier transform on the input register
                           {0, -1, -1, kPi, -kHalfPi},
                           {2, 0, 1, kPi, -kHalfPi},
                           {0, -1, 1, kPi, kHalfPi},
                           {0, -1, -1, kPi, -kHalfPi},
                           {2, -2, -1, kPi, kHalfPi},
                       });
}

PulseSequence teleport_sequence(const ChainConfig& config, double rabi) {
  require_four_qubits(config.n, "teleport_sequence");
  return make_sequence(config, rabi, "teleport",
                       {
                           // Bell pair between qubit 2 (Alice) and qubit 0 (Bob)
                           {2, 2, 1, kHalfPi, -kHalfPi},
                           {2, 0, 1, kHalfPi, -kHalfPi},
                           {0, 1, -1, kPi, -kHalfPi},
                           // controlled-not of qubit 3 onto qubit 2
                           {2, 0, 1, kPi, kHalfPi},
                           {2, 0, -1, kPi, -kHalfPi},
                           // basis-change rotation of qubit 3
                           {3, 1, 1, kHalfPi, -kHalfPi},
                           {3, -1, 1, kHalfPi, -kHalfPi},
                       });
}

std::array<StateVector, 3> shor4_ideal_states() {
  auto make = [](std::initializer_list<int> support) {
    StateVector s = StateVector::zero(4);
    for (int alpha : support) s.amps[alpha] = Complex{0.5, 0.0};
    return s;
  };
  return {
      make({0, 4, 8, 12}),   // uniform input register, y = 00
      make({1, 7, 9, 15}),   // y(x) = 3^x mod 4 written into the y register
      make({1, 3, 9, 11}),   // after the inverse transform: peaks at x = 0, 2
  };
}

MeasurementReport x_register_probabilities(const StateVector& state) {
  require_four_qubits(state.n, "x_register_probabilities");

  MeasurementReport report;
  for (int alpha = 0; alpha < state.dim(); ++alpha)
    report.x_probs[alpha >> 2] += std::norm(state.amps[alpha]);

  // Period of the encoded function from the peak spacing: peaks sit on
  // multiples of dim_x / T.
  constexpr double threshold = 0.1;
  int spacing = 0;
  for (int x = 0; x < 4; ++x)
    if (report.x_probs[x] > threshold) spacing = std::gcd(spacing, x);
  report.inferred_period = (spacing > 0) ? 4 / spacing : 1;
  return report;
}

TeleportReport teleport_verify(const StateVector& state, Complex c0, Complex c1) {
  require_four_qubits(state.n, "teleport_verify");
  if (std::abs(std::norm(c0) + std::norm(c1) - 1.0) > 1e-9)
    throw std::invalid_argument("(c0, c1) must be normalized");

  TeleportReport report;
  for (int outcome = 0; outcome < 4; ++outcome) {
    TeleportBranch& branch = report.branches[outcome];
    branch.outcome = outcome;

    // branch amplitudes over (qubit1, qubit0)
    std::array<Complex, 4> b;
    for (int j = 0; j < 4; ++j) b[j] = state.amps[(outcome << 2) | j];
    for (const Complex& amp : b) branch.probability += std::norm(amp);

    if (branch.probability < 1e-12) {
      branch.empty = true;
      continue;
    }
    const double scale = 1.0 / std::sqrt(branch.probability);
    for (Complex& amp : b) amp *= scale;
    branch.qubit1_zero_population = std::norm(b[0]) + std::norm(b[1]);

    // Bob's qubit-0 amplitudes within the qubit1 = |0> part, then the
    // outcome-dependent correction.
    const Complex b0 = b[0];
    const Complex b1 = b[1];
    switch (outcome) {
      case 0:  // identity
        branch.bob0 = b0;
        branch.bob1 = b1;
        break;
      case 1:  // bit flip
        branch.bob0 = b1;
        branch.bob1 = b0;
        break;
      case 2:  // -sigma_z
        branch.bob0 = -b0;
        branch.bob1 = b1;
        break;
      case 3:  // bit flip after sigma_z
        branch.bob0 = -b1;
        branch.bob1 = b0;
        break;
    }
    branch.overlap = std::norm(std::conj(c0) * branch.bob0 + std::conj(c1) * branch.bob1);
  }
  return report;
}

}  // namespace spinchain
