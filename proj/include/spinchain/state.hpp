#pragma once

#include <complex>
#include <vector>

namespace spinchain {

using Complex = std::complex<double>;

/// Interaction-picture amplitudes D_alpha over the 2^n computational
/// basis states. Bit j of the index is the state of qubit j.
struct StateVector {
  int n = 0;
  std::vector<Complex> amps;

  static StateVector zero(int n);
  static StateVector basis(int n, int alpha);

  int dim() const { return static_cast<int>(amps.size()); }
};

std::complex<double> inner_product(const StateVector& a, const StateVector& b);  // <a|b>
double norm_squared(const StateVector& state);

/// |<a|b>|^2 — symmetric and invariant under a global phase of either
/// argument. Throws std::invalid_argument on dimension mismatch.
double fidelity(const StateVector& a, const StateVector& b);

/// Throws std::invalid_argument unless |norm^2 - 1| <= tol.
void require_normalized(const StateVector& state, double tol = 1e-9);

}  // namespace spinchain
