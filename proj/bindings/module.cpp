#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "spinchain/engine.hpp"
#include "spinchain/output.hpp"
#include "spinchain/protocols.hpp"
#include "spinchain/sequence_io.hpp"
#include "spinchain/sweep.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace spinchain;

PYBIND11_MODULE(_core, m) {
  m.doc() = "pulse-level simulator for an Ising spin-chain quantum register";

  py::class_<ChainConfig>(m, "ChainConfig")
      .def(py::init<>())
      .def(py::init([](int n, std::vector<double> larmor, double j1, double j2) {
             ChainConfig c{n, std::move(larmor), j1, j2};
             validate_config(c);
             return c;
           }),
           "n"_a, "larmor"_a, "j1"_a, "j2"_a)
      .def_readwrite("n", &ChainConfig::n)
      .def_readwrite("larmor", &ChainConfig::larmor)
      .def_readwrite("j1", &ChainConfig::j1)
      .def_readwrite("j2", &ChainConfig::j2);

  m.def("validate_config", &validate_config, "config"_a,
        "Check the config invariants; returns warnings, raises on hard errors.");
  m.def("energy_of", &energy_of, "config"_a, "alpha"_a);
  m.def("transition_frequency", &transition_frequency, "config"_a, "k"_a, "alpha"_a);
  m.def("detuning", &detuning, "config"_a, "drive_w"_a, "k"_a, "alpha"_a);
  m.def("basis_label", &basis_label, "n"_a, "alpha"_a);

  py::class_<OffsetSet>(m, "OffsetSet")
      .def_readonly("mu", &OffsetSet::mu)
      .def_readonly("nu", &OffsetSet::nu)
      .def("contains", &OffsetSet::contains, "mu"_a, "nu"_a)
      .def("pairs", &OffsetSet::pairs);
  m.def("allowed_offsets", &allowed_offsets, "config"_a, "k"_a);

  py::class_<StateVector>(m, "StateVector")
      .def(py::init<>())
      .def_static("zero", &StateVector::zero, "n"_a)
      .def_static("basis", &StateVector::basis, "n"_a, "alpha"_a)
      .def_readwrite("n", &StateVector::n)
      .def_readwrite("amps", &StateVector::amps)
      .def("dim", &StateVector::dim);
  m.def("inner_product", &inner_product, "a"_a, "b"_a);
  m.def("norm_squared", &norm_squared, "state"_a);
  m.def("fidelity", &fidelity, "a"_a, "b"_a);

  py::class_<Pulse>(m, "Pulse")
      .def(py::init<>())
      .def(py::init([](int qubit, int mu, int nu, double theta, double phi, double rabi) {
             return Pulse{qubit, mu, nu, theta, phi, rabi};
           }),
           "qubit"_a, "mu"_a, "nu"_a, "theta"_a, "phi"_a, "rabi"_a)
      .def_readwrite("qubit", &Pulse::qubit)
      .def_readwrite("mu", &Pulse::mu)
      .def_readwrite("nu", &Pulse::nu)
      .def_readwrite("theta", &Pulse::theta)
      .def_readwrite("phi", &Pulse::phi)
      .def_readwrite("rabi", &Pulse::rabi)
      .def("duration", &Pulse::duration)
      .def("drive_frequency", &Pulse::drive_frequency, "config"_a);

  py::enum_<BlockClass>(m, "BlockClass")
      .value("resonant", BlockClass::resonant)
      .value("near_resonant", BlockClass::near_resonant)
      .value("far_resonant", BlockClass::far_resonant);

  py::class_<TransitionBlock>(m, "TransitionBlock")
      .def_readonly("alpha0", &TransitionBlock::alpha0)
      .def_readonly("alpha1", &TransitionBlock::alpha1)
      .def_readonly("delta", &TransitionBlock::delta)
      .def_readonly("cls", &TransitionBlock::cls);
  m.def("classify_transitions", &classify_transitions, "config"_a, "pulse"_a);

  py::class_<BlockUnitary>(m, "BlockUnitary")
      .def_readonly("m00", &BlockUnitary::m00)
      .def_readonly("m01", &BlockUnitary::m01)
      .def_readonly("m10", &BlockUnitary::m10)
      .def_readonly("m11", &BlockUnitary::m11);
  m.def("block_propagator", &block_propagator, "delta"_a, "rabi"_a, "phi"_a, "t"_a);

  m.def("apply_ideal", &apply_ideal, "config"_a, "pulse"_a, "state"_a);
  m.def("apply_block", &apply_block, "config"_a, "pulse"_a, "state"_a);

  py::enum_<PulseAngle>(m, "PulseAngle")
      .value("pi", PulseAngle::pi)
      .value("half_pi", PulseAngle::half_pi);
  m.def("optimal_rabi", &optimal_rabi, "delta"_a, "k"_a, "angle"_a);

  py::class_<PulseSequence>(m, "PulseSequence")
      .def(py::init<>())
      .def_readwrite("config", &PulseSequence::config)
      .def_readwrite("pulses", &PulseSequence::pulses)
      .def_readwrite("label", &PulseSequence::label);
  m.def("validate_sequence", &validate_sequence, "sequence"_a);
  m.def("total_duration", &total_duration, "sequence"_a);
  m.def("with_rabi", &with_rabi, "sequence"_a, "rabi"_a);

  py::class_<IntegratorSettings>(m, "IntegratorSettings")
      .def(py::init<>())
      .def_readwrite("samples_per_period", &IntegratorSettings::samples_per_period)
      .def_readwrite("trace_stride", &IntegratorSettings::trace_stride)
      .def_readwrite("convergence_tol", &IntegratorSettings::convergence_tol)
      .def_readwrite("trace_samples_per_pulse", &IntegratorSettings::trace_samples_per_pulse);

  py::class_<TraceSample>(m, "TraceSample")
      .def_readonly("t", &TraceSample::t)
      .def_readonly("fidelity", &TraceSample::fidelity)
      .def_readonly("pulse_index", &TraceSample::pulse_index);
  py::class_<FidelityTrace>(m, "FidelityTrace").def_readonly("samples", &FidelityTrace::samples);

  py::enum_<EvolutionMode>(m, "EvolutionMode")
      .value("full", EvolutionMode::full)
      .value("block", EvolutionMode::block)
      .value("ideal", EvolutionMode::ideal);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("state", &RunResult::state)
      .def_readonly("trace", &RunResult::trace);
  m.def("run_sequence", &run_sequence, "sequence"_a, "initial"_a, "mode"_a,
        "settings"_a = IntegratorSettings{});
  m.def("convergence_check", &convergence_check, "sequence"_a, "initial"_a, "settings"_a);

  m.def("shor4_sequence", &shor4_sequence, "config"_a, "rabi"_a);
  m.def("teleport_sequence", &teleport_sequence, "config"_a, "rabi"_a);
  m.def("shor4_ideal_states", &shor4_ideal_states);

  py::class_<MeasurementReport>(m, "MeasurementReport")
      .def_readonly("x_probs", &MeasurementReport::x_probs)
      .def_readonly("inferred_period", &MeasurementReport::inferred_period);
  m.def("x_register_probabilities", &x_register_probabilities, "state"_a);

  py::class_<TeleportBranch>(m, "TeleportBranch")
      .def_readonly("outcome", &TeleportBranch::outcome)
      .def_readonly("probability", &TeleportBranch::probability)
      .def_readonly("empty", &TeleportBranch::empty)
      .def_readonly("qubit1_zero_population", &TeleportBranch::qubit1_zero_population)
      .def_readonly("bob0", &TeleportBranch::bob0)
      .def_readonly("bob1", &TeleportBranch::bob1)
      .def_readonly("overlap", &TeleportBranch::overlap);
  py::class_<TeleportReport>(m, "TeleportReport")
      .def_readonly("branches", &TeleportReport::branches);
  m.def("teleport_verify", &teleport_verify, "state"_a, "c0"_a, "c1"_a);

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::class_<ParsedSequence>(m, "ParsedSequence")
      .def_readonly("config", &ParsedSequence::config)
      .def_readonly("sequence", &ParsedSequence::sequence)
      .def_readonly("default_rabi", &ParsedSequence::default_rabi)
      .def_readonly("warnings", &ParsedSequence::warnings);
  m.def("parse_sequence_file", [](const std::string& text) { return parse_sequence_file(text); },
        "text"_a);
  m.def("serialize_sequence", &serialize_sequence, "parsed"_a);

  py::class_<SweepSpec>(m, "SweepSpec")
      .def(py::init<>())
      .def_readwrite("omega_min", &SweepSpec::omega_min)
      .def_readwrite("omega_max", &SweepSpec::omega_max)
      .def_readwrite("points", &SweepSpec::points)
      .def_readwrite("sequence", &SweepSpec::sequence)
      .def_readwrite("initial", &SweepSpec::initial);
  py::class_<SweepPoint>(m, "SweepPoint")
      .def_readonly("omega", &SweepPoint::omega)
      .def_readonly("fidelity", &SweepPoint::fidelity);
  m.def("sweep_rabi", &sweep_rabi, "spec"_a, "settings"_a = IntegratorSettings{},
        "threads"_a = 0);

  m.def("amplitudes_csv", [](const StateVector& actual, const StateVector& ideal) {
    std::ostringstream out;
    write_amplitudes_csv(out, actual, ideal);
    return out.str();
  });
  m.def("trace_csv", [](const FidelityTrace& trace) {
    std::ostringstream out;
    write_trace_csv(out, trace);
    return out.str();
  });
  m.def("sweep_csv", [](const std::vector<SweepPoint>& points) {
    std::ostringstream out;
    write_sweep_csv(out, points);
    return out.str();
  });
}
