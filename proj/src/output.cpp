#include "spinchain/output.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace spinchain {

namespace {

std::string num(double value) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string num(Complex value) { return "(" + num(value.real()) + "," + num(value.imag()) + ")"; }

StateVector rotated_to_real(const StateVector& state, int pivot) {
  StateVector out = state;
  const Complex amp = state.amps[pivot];
  const double mag = std::abs(amp);
  if (mag > 0.0) {
    const Complex factor = std::conj(amp) / mag;
    for (Complex& c : out.amps) c *= factor;
  }
  return out;
}

}  // namespace

std::pair<StateVector, StateVector> gauge_fixed_pair(const StateVector& actual,
                                                     const StateVector& ideal) {
  if (actual.dim() != ideal.dim()) throw std::invalid_argument("state dimensions differ");
  int pivot = 0;
  double best = -1.0;
  for (int i = 0; i < ideal.dim(); ++i) {
    const double mag = std::abs(ideal.amps[i]);
    if (mag > best) {
      best = mag;
      pivot = i;
    }
  }
  return {rotated_to_real(actual, pivot), rotated_to_real(ideal, pivot)};
}

void write_amplitudes_csv(std::ostream& out, const StateVector& actual,
                          const StateVector& ideal) {
  const auto [fixed_actual, fixed_ideal] = gauge_fixed_pair(actual, ideal);
  out << "alpha,bitstring,re,im,re_ideal,im_ideal,re_diff,im_diff\n";
  for (int alpha = 0; alpha < fixed_actual.dim(); ++alpha) {
    const Complex a = fixed_actual.amps[alpha];
    const Complex b = fixed_ideal.amps[alpha];
    out << alpha << "," << basis_label(fixed_actual.n, alpha) << "," << num(a.real()) << ","
        << num(a.imag()) << "," << num(b.real()) << "," << num(b.imag()) << ","
        << num(a.real() - b.real()) << "," << num(a.imag() - b.imag()) << "\n";
  }
}

void write_trace_csv(std::ostream& out, const FidelityTrace& trace) {
  out << "t,F,pulse_index\n";
  for (const TraceSample& sample : trace.samples)
    out << num(sample.t) << "," << num(sample.fidelity) << "," << sample.pulse_index << "\n";
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepPoint>& points) {
  out << "omega,F_fi\n";
  for (const SweepPoint& point : points)
    out << num(point.omega) << "," << num(point.fidelity) << "\n";
}

void write_shor_report(std::ostream& out, const MeasurementReport& report,
                       std::optional<double> final_fidelity) {
  out << "x-register measurement (qubits 3,2; qubits 1,0 traced out)\n";
  static const char* labels[4] = {"00", "01", "10", "11"};
  for (int x = 0; x < 4; ++x)
    out << "p(" << labels[x] << ") = " << num(report.x_probs[x]) << "\n";
  out << "inferred period = " << report.inferred_period << "\n";
  if (final_fidelity) out << "final fidelity F_fi = " << num(*final_fidelity) << "\n";
}

void write_teleport_report(std::ostream& out, const TeleportReport& report, Complex c0,
                           Complex c1, std::optional<double> final_fidelity) {
  out << "teleport verification, transported state c0 = " << num(c0) << ", c1 = " << num(c1)
      << "\n";
  static const char* labels[4] = {"00", "01", "10", "11"};
  for (const TeleportBranch& branch : report.branches) {
    out << "outcome " << labels[branch.outcome] << ": probability = " << num(branch.probability);
    if (branch.empty) {
      out << " (empty branch)\n";
      continue;
    }
    out << ", qubit1 |0> population = " << num(branch.qubit1_zero_population)
        << ", bob = " << num(branch.bob0) << " " << num(branch.bob1)
        << ", overlap = " << num(branch.overlap) << "\n";
  }
  if (final_fidelity) out << "final fidelity F_fi = " << num(*final_fidelity) << "\n";
}

}  // namespace spinchain
