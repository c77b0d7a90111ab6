// Command-line front end: sequence simulation, Rabi sweeps, the built-in
// factorization and teleportation programs, and the 2*pi*k Rabi
// calculator. Writes plot-ready CSV files.

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "spinchain/engine.hpp"
#include "spinchain/output.hpp"
#include "spinchain/protocols.hpp"
#include "spinchain/sequence_io.hpp"
#include "spinchain/sweep.hpp"

namespace fs = std::filesystem;
using namespace spinchain;

namespace {

ChainConfig default_config() { return ChainConfig{4, {100, 200, 400, 800}, 10, 0.4}; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  writer(out);
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

StateVector initial_from_bitstring(int n, const std::string& bits) {
  if (static_cast<int>(bits.size()) != n)
    throw std::runtime_error("initial state needs exactly " + std::to_string(n) + " bits");
  int alpha = 0;
  for (int i = 0; i < n; ++i) {
    const char c = bits[i];
    if (c != '0' && c != '1') throw std::runtime_error("initial state must be a 0/1 string");
    if (c == '1') alpha |= 1 << (n - 1 - i);  // leftmost char is the highest qubit
  }
  return StateVector::basis(n, alpha);
}

Complex parse_complex(const std::string& text) {
  double re = 0.0, im = 0.0;
  const std::size_t comma = text.find(',');
  try {
    if (comma == std::string::npos) {
      re = std::stod(text);
    } else {
      re = std::stod(text.substr(0, comma));
      im = std::stod(text.substr(comma + 1));
    }
  } catch (const std::exception&) {
    throw std::runtime_error("cannot parse complex value '" + text + "' (expected re[,im])");
  }
  return {re, im};
}

EvolutionMode parse_mode(const std::string& mode) {
  if (mode == "full") return EvolutionMode::full;
  if (mode == "block") return EvolutionMode::block;
  if (mode == "ideal") return EvolutionMode::ideal;
  throw std::runtime_error("unknown mode '" + mode + "' (full, block, ideal)");
}

struct RunOutputs {
  StateVector final_state;
  StateVector ideal_state;
  FidelityTrace trace;
};

RunOutputs run_with_reference(const PulseSequence& sequence, const StateVector& initial,
                              EvolutionMode mode, const IntegratorSettings& settings) {
  RunOutputs out;
  RunResult run = run_sequence(sequence, initial, mode, settings);
  out.final_state = std::move(run.state);
  out.trace = std::move(run.trace);
  out.ideal_state = (mode == EvolutionMode::ideal)
                        ? out.final_state
                        : run_sequence(sequence, initial, EvolutionMode::ideal, settings).state;
  return out;
}

void emit_state_outputs(const fs::path& dir, const RunOutputs& run) {
  write_file(dir / "amplitudes.csv",
             [&](std::ostream& o) { write_amplitudes_csv(o, run.final_state, run.ideal_state); });
  write_file(dir / "fidelity_trace.csv", [&](std::ostream& o) { write_trace_csv(o, run.trace); });
}

void certify(const PulseSequence& sequence, const StateVector& initial,
             const IntegratorSettings& settings) {
  const double diff = convergence_check(sequence, initial, settings);
  std::cerr << "step-halving check: max amplitude difference = " << diff << "\n";
  if (diff > settings.convergence_tol)
    throw std::runtime_error("integration not converged: " + std::to_string(diff) + " > tol " +
                             std::to_string(settings.convergence_tol));
}

void sample_outcomes(const StateVector& state, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<double> weights;
  weights.reserve(state.dim());
  for (const Complex& amp : state.amps) weights.push_back(std::norm(amp));
  std::discrete_distribution<int> dist(weights.begin(), weights.end());
  std::vector<int> counts(state.dim(), 0);
  for (int i = 0; i < count; ++i) ++counts[dist(rng)];
  std::cout << "sampled outcomes (" << count << " shots, seed " << seed << "):\n";
  for (int alpha = 0; alpha < state.dim(); ++alpha)
    if (counts[alpha] > 0)
      std::cout << "  |" << basis_label(state.n, alpha) << ">  " << counts[alpha] << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pulse-level simulator for an Ising spin-chain quantum register"};
  app.require_subcommand(1);

  IntegratorSettings settings;
  std::string out_dir = ".";
  bool do_certify = false;
  int threads = 0;

  auto add_common = [&](CLI::App* cmd, bool with_certify = true) {
    cmd->add_option("--out-dir", out_dir, "output directory (created if missing)");
    cmd->add_option("--samples-per-period", settings.samples_per_period,
                    "integration steps per fastest detuning period (>= 16)");
    cmd->add_option("--trace-stride", settings.trace_stride,
                    "record every Nth integration step (0 = auto)");
    cmd->add_option("--trace-samples", settings.trace_samples_per_pulse,
                    "target trace samples per pulse (0 disables the trace)");
    if (with_certify)
      cmd->add_flag("--certify", do_certify, "rerun with halved step and compare");
  };

  // simulate
  auto* simulate = app.add_subcommand("simulate", "run a sequence file");
  std::string sim_file, sim_mode = "full", sim_initial;
  simulate->add_option("file", sim_file, "sequence file")->required();
  simulate->add_option("--mode", sim_mode, "full | block | ideal");
  simulate->add_option("--initial", sim_initial, "initial basis state as a bit string");
  add_common(simulate);

  // sweep-rabi
  auto* sweep = app.add_subcommand("sweep-rabi", "scan the Rabi frequency of a sequence");
  std::string sweep_file, sweep_initial;
  SweepSpec sweep_spec;
  sweep_spec.omega_min = 0.08;
  sweep_spec.omega_max = 0.48;
  sweep_spec.points = 200;
  sweep->add_option("file", sweep_file, "sequence file")->required();
  sweep->add_option("--omega-min", sweep_spec.omega_min, "lower end of the scan");
  sweep->add_option("--omega-max", sweep_spec.omega_max, "upper end of the scan");
  sweep->add_option("--points", sweep_spec.points, "number of grid points");
  sweep->add_option("--initial", sweep_initial, "initial basis state as a bit string");
  sweep->add_option("--threads", threads, "worker threads (0 = auto)");
  add_common(sweep, false);

  // protocol
  auto* protocol = app.add_subcommand("protocol", "run a built-in program");
  protocol->require_subcommand(1);
  double omega = 0.1;
  std::string proto_mode = "full";
  int sample_count = 0;
  unsigned sample_seed = 1;

  auto* shor = protocol->add_subcommand("shor4", "factorization of 4 on the default chain");
  shor->add_option("--omega", omega, "Rabi frequency");
  shor->add_option("--mode", proto_mode, "full | block | ideal");
  shor->add_option("--sample", sample_count, "demo sampler: number of shots");
  shor->add_option("--seed", sample_seed, "demo sampler seed");
  add_common(shor);

  auto* teleport = protocol->add_subcommand("teleport", "3-qubit teleportation");
  std::string c0_text = "0.3333333333333333", c1_text = "0.9428090415820634";
  teleport->add_option("--c0", c0_text, "transported amplitude of |0> as re[,im]");
  teleport->add_option("--c1", c1_text, "transported amplitude of |1> as re[,im]");
  teleport->add_option("--omega", omega, "Rabi frequency");
  teleport->add_option("--mode", proto_mode, "full | block | ideal");
  add_common(teleport);

  // optimal-rabi
  auto* optimal = app.add_subcommand("optimal-rabi", "Rabi frequency of the 2*pi*k null");
  double opt_delta = 0.0;
  int opt_k = 1;
  std::string opt_angle = "pi";
  optimal->add_option("--delta", opt_delta, "detuning to suppress")->required();
  optimal->add_option("--k", opt_k, "number of full revolutions")->required();
  optimal->add_option("--angle", opt_angle, "pi | pi/2");

  // validate
  auto* validate = app.add_subcommand("validate", "check a sequence file");
  std::string val_file;
  validate->add_option("file", val_file, "sequence file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) {
      ParsedSequence parsed = parse_sequence_file(read_file(sim_file));
      print_warnings(parsed.warnings);
      StateVector initial = sim_initial.empty()
                                ? StateVector::basis(parsed.config.n, 0)
                                : initial_from_bitstring(parsed.config.n, sim_initial);
      const EvolutionMode mode = parse_mode(sim_mode);
      fs::create_directories(out_dir);
      RunOutputs run = run_with_reference(parsed.sequence, initial, mode, settings);
      emit_state_outputs(out_dir, run);
      if (do_certify && mode == EvolutionMode::full)
        certify(parsed.sequence, initial, settings);
      std::cout << "final fidelity vs ideal = " << fidelity(run.ideal_state, run.final_state)
                << "\n";
    } else if (*sweep) {
      ParsedSequence parsed = parse_sequence_file(read_file(sweep_file));
      print_warnings(parsed.warnings);
      sweep_spec.sequence = parsed.sequence;
      sweep_spec.initial = sweep_initial.empty()
                               ? StateVector::basis(parsed.config.n, 0)
                               : initial_from_bitstring(parsed.config.n, sweep_initial);
      const auto points = sweep_rabi(sweep_spec, settings, threads);
      fs::create_directories(out_dir);
      write_file(fs::path(out_dir) / "sweep.csv",
                 [&](std::ostream& o) { write_sweep_csv(o, points); });
      std::cout << "wrote " << points.size() << " sweep points\n";
    } else if (*shor) {
      const ChainConfig config = default_config();
      print_warnings(validate_config(config));
      PulseSequence sequence = shor4_sequence(config, omega);
      StateVector initial = StateVector::basis(4, 0);
      RunOutputs run = run_with_reference(sequence, initial, parse_mode(proto_mode), settings);
      fs::create_directories(out_dir);
      emit_state_outputs(out_dir, run);
      const MeasurementReport report = x_register_probabilities(run.final_state);
      const double f_fi = fidelity(run.ideal_state, run.final_state);
      write_file(fs::path(out_dir) / "report.txt",
                 [&](std::ostream& o) { write_shor_report(o, report, f_fi); });
      write_shor_report(std::cout, report, f_fi);
      if (sample_count > 0) sample_outcomes(run.final_state, sample_count, sample_seed);
      if (do_certify && parse_mode(proto_mode) == EvolutionMode::full)
        certify(sequence, initial, settings);
    } else if (*teleport) {
      const Complex c0 = parse_complex(c0_text);
      const Complex c1 = parse_complex(c1_text);
      const double norm = std::norm(c0) + std::norm(c1);
      if (std::abs(norm - 1.0) > 1e-9)
        throw std::runtime_error("|c0|^2 + |c1|^2 must be 1 (got " + std::to_string(norm) + ")");
      const ChainConfig config = default_config();
      print_warnings(validate_config(config));
      PulseSequence sequence = teleport_sequence(config, omega);
      StateVector initial = StateVector::zero(4);
      initial.amps[0] = c0;  // |0000>
      initial.amps[8] = c1;  // |1000>
      RunOutputs run = run_with_reference(sequence, initial, parse_mode(proto_mode), settings);
      fs::create_directories(out_dir);
      emit_state_outputs(out_dir, run);
      const TeleportReport report = teleport_verify(run.final_state, c0, c1);
      const double f_fi = fidelity(run.ideal_state, run.final_state);
      write_file(fs::path(out_dir) / "report.txt",
                 [&](std::ostream& o) { write_teleport_report(o, report, c0, c1, f_fi); });
      write_teleport_report(std::cout, report, c0, c1, f_fi);
      if (do_certify && parse_mode(proto_mode) == EvolutionMode::full)
        certify(sequence, initial, settings);
    } else if (*optimal) {
      PulseAngle angle;
      if (opt_angle == "pi")
        angle = PulseAngle::pi;
      else if (opt_angle == "pi/2")
        angle = PulseAngle::half_pi;
      else
        throw std::runtime_error("angle must be 'pi' or 'pi/2'");
      char buf[48];
      std::snprintf(buf, sizeof(buf), "%.12g", optimal_rabi(opt_delta, opt_k, angle));
      std::cout << buf << "\n";
    } else if (*validate) {
      ParsedSequence parsed = parse_sequence_file(read_file(val_file));
      print_warnings(parsed.warnings);
      std::cout << "OK: " << parsed.config.n << " qubits, " << parsed.sequence.pulses.size()
                << " pulses\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
