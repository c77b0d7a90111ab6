#pragma once

#include <iosfwd>
#include <optional>
#include <utility>

#include "spinchain/engine.hpp"
#include "spinchain/protocols.hpp"
#include "spinchain/sweep.hpp"

namespace spinchain {

/// Removes the unobservable global phase from a simulated/ideal state
/// pair so their amplitudes can be compared entrywise: both states are
/// rotated to make the component that is largest in `ideal` real and
/// positive.
std::pair<StateVector, StateVector> gauge_fixed_pair(const StateVector& actual,
                                                     const StateVector& ideal);

// CSV writers: comma-separated, one header row, LF line endings, numbers
// with 12 significant digits.

/// alpha,bitstring,re,im,re_ideal,im_ideal,re_diff,im_diff (gauge-fixed).
void write_amplitudes_csv(std::ostream& out, const StateVector& actual,
                          const StateVector& ideal);

/// t,F,pulse_index.
void write_trace_csv(std::ostream& out, const FidelityTrace& trace);

/// omega,F_fi.
void write_sweep_csv(std::ostream& out, const std::vector<SweepPoint>& points);

void write_shor_report(std::ostream& out, const MeasurementReport& report,
                       std::optional<double> final_fidelity);

void write_teleport_report(std::ostream& out, const TeleportReport& report,
                           Complex c0, Complex c1, std::optional<double> final_fidelity);

}  // namespace spinchain
