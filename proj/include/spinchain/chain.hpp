#pragma once

#include <string>
#include <utility>
#include <vector>

namespace spinchain {

/// Static description of the quantum register: an Ising spin chain with
/// longitudinal couplings between first and second neighbors. All
/// frequencies are angular frequencies in one consistent (dimensionless)
/// unit system; time is measured in the inverse unit and hbar = 1.
struct ChainConfig {
  int n = 0;                   ///< number of qubits, >= 2
  std::vector<double> larmor;  ///< per-qubit Larmor frequency w_k
  double j1 = 0.0;             ///< nearest-neighbor coupling J
  double j2 = 0.0;             ///< next-nearest-neighbor coupling J'
};

/// Checks the config invariants. Hard violations throw
/// std::invalid_argument: n < 2, wrong larmor count, non-positive or
/// repeated Larmor frequencies, j2 < 0, j1 <= j2, or a degenerate
/// transition spectrum (two distinct (k, mu, nu) lines closer than
/// 1e-9 * max w_k). Returns non-fatal warnings, e.g. for j2 == 0 where
/// the chain degenerates to a nearest-neighbor-only model.
std::vector<std::string> validate_config(const ChainConfig& config);

int dimension(const ChainConfig& config);  // 2^n

/// Value of qubit k in basis state alpha (bit k of alpha).
bool qubit_bit(int alpha, int k);

/// Printable label i_{n-1}...i_1 i_0, most significant qubit leftmost
/// (alpha = 5, n = 3 -> "101").
std::string basis_label(int n, int alpha);

/// Eigenvalue E_alpha of the drive-free Hamiltonian.
double energy_of(const ChainConfig& config, int alpha);

/// Frequency of the bit-k flip transition out of basis state alpha:
/// w_k plus the neighbor-dependent shifts mu*J + nu*J'. Independent of
/// the value of bit k itself; neighbor terms outside the chain are
/// dropped.
double transition_frequency(const ChainConfig& config, int k, int alpha);

/// Neighbor offsets (mu, nu) of the bit-k transition out of alpha.
/// nu collapses to 0 when j2 == 0 (the offset is unobservable then).
std::pair<int, int> transition_offsets(const ChainConfig& config, int k, int alpha);

/// The offsets realizable on qubit k: a drive at w_k + mu*J + nu*J'
/// hits some transition exactly when (mu, nu) is in this set.
struct OffsetSet {
  std::vector<int> mu;  // ascending
  std::vector<int> nu;  // ascending

  bool contains(int mu_value, int nu_value) const;
  std::vector<std::pair<int, int>> pairs() const;  // cartesian product
};

OffsetSet allowed_offsets(const ChainConfig& config, int k);

/// drive_w minus transition_frequency(config, k, alpha); zero exactly
/// when the bit-k flip of alpha is resonant with the drive.
double detuning(const ChainConfig& config, double drive_w, int k, int alpha);

}  // namespace spinchain
