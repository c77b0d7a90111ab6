#include "spinchain/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinchain {

StateVector StateVector::zero(int n) {
  StateVector s;
  s.n = n;
  s.amps.assign(std::size_t{1} << n, Complex{0.0, 0.0});
  return s;
}

StateVector StateVector::basis(int n, int alpha) {
  StateVector s = zero(n);
  if (alpha < 0 || alpha >= s.dim())
    throw std::out_of_range("basis index out of range: " + std::to_string(alpha));
  s.amps[alpha] = Complex{1.0, 0.0};
  return s;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("state dimensions differ");
  Complex acc{0.0, 0.0};
  for (int i = 0; i < a.dim(); ++i) acc += std::conj(a.amps[i]) * b.amps[i];
  return acc;
}

double norm_squared(const StateVector& state) {
  double acc = 0.0;
  for (const Complex& c : state.amps) acc += std::norm(c);
  return acc;
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner_product(a, b));
}

void require_normalized(const StateVector& state, double tol) {
  const double drift = std::abs(norm_squared(state) - 1.0);
  if (drift > tol)
    throw std::invalid_argument("state is not normalized (|norm^2 - 1| = " +
                                std::to_string(drift) + ")");
}

}  // namespace spinchain
