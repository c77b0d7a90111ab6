"""Smoke tests for the python bindings: exercise the main operations
end to end on small cases. The heavy numerical checks live in the C++
suites."""

import math

import pytest

import spinchain as sc


@pytest.fixture(scope="module")
def config():
    return sc.ChainConfig(n=4, larmor=[100.0, 200.0, 400.0, 800.0], j1=10.0, j2=0.4)


def test_spectrum(config):
    assert sc.energy_of(config, 0) == pytest.approx(-765.4)
    assert sc.transition_frequency(config, 2, 0) == pytest.approx(420.4)
    assert sc.detuning(config, 200.4, 1, 9) == pytest.approx(0.8)
    assert sc.basis_label(4, 9) == "1001"


def test_config_validation_raises():
    with pytest.raises(Exception):
        sc.ChainConfig(n=2, larmor=[100.0, 100.0], j1=10.0, j2=0.4)


def test_allowed_offsets(config):
    edge = sc.allowed_offsets(config, 0)
    assert edge.mu == [-1, 1]
    assert edge.nu == [-1, 1]
    assert not edge.contains(2, 1)


def test_optimal_rabi():
    assert sc.optimal_rabi(0.8, 4, sc.PulseAngle.pi) == pytest.approx(0.100791, abs=1e-6)
    assert sc.optimal_rabi(0.8, 1, sc.PulseAngle.half_pi) == pytest.approx(0.20656, abs=1e-5)


def test_ideal_factorization_readout(config):
    seq = sc.shor4_sequence(config, 0.1)
    assert len(seq.pulses) == 12
    run = sc.run_sequence(seq, sc.StateVector.basis(4, 0), sc.EvolutionMode.ideal)
    ideal_final = sc.shor4_ideal_states()[2]
    assert sc.fidelity(run.state, ideal_final) == pytest.approx(1.0, abs=1e-12)
    report = sc.x_register_probabilities(run.state)
    assert report.x_probs[0] == pytest.approx(0.5, abs=1e-12)
    assert report.inferred_period == 2


def test_ideal_teleport_roundtrip(config):
    seq = sc.teleport_sequence(config, 0.1)
    c0, c1 = 0.6, complex(0.0, 0.8)
    initial = sc.StateVector.zero(4)
    amps = initial.amps
    amps[0], amps[8] = c0, c1
    initial.amps = amps
    run = sc.run_sequence(seq, initial, sc.EvolutionMode.ideal)
    report = sc.teleport_verify(run.state, c0, c1)
    for branch in report.branches:
        assert branch.probability == pytest.approx(0.25, abs=1e-12)
        assert branch.overlap == pytest.approx(1.0, abs=1e-12)


def test_full_engine_small_pulse():
    cfg = sc.ChainConfig(n=2, larmor=[100.0, 200.0], j1=5.0, j2=0.0)
    seq = sc.PulseSequence()
    seq.config = cfg
    seq.pulses = [sc.Pulse(qubit=0, mu=1, nu=0, theta=math.pi, phi=-math.pi / 2, rabi=0.3)]
    run = sc.run_sequence(seq, sc.StateVector.basis(2, 0), sc.EvolutionMode.full)
    assert abs(run.state.amps[1]) ** 2 > 0.999
    assert sc.norm_squared(run.state) == pytest.approx(1.0, abs=1e-9)
    assert len(run.trace.samples) > 0


def test_sequence_file_roundtrip():
    text = "n=4\nlarmor=100,200,400,800\nJ=10\nJ2=0.4\nomega=0.1\npulse 2 2 1 pi/2 pi/2\n"
    parsed = sc.parse_sequence_file(text)
    assert parsed.config.n == 4
    assert parsed.sequence.pulses[0].theta == pytest.approx(math.pi / 2)
    again = sc.parse_sequence_file(sc.serialize_sequence(parsed))
    assert again.sequence.pulses[0].theta == parsed.sequence.pulses[0].theta
    with pytest.raises(ValueError):
        sc.parse_sequence_file(text + "pulse 0 2 1 pi 0\n")


def test_block_propagator_unitarity():
    u = sc.block_propagator(0.8, 0.2, 0.3, 5.0)
    col0 = abs(u.m00) ** 2 + abs(u.m10) ** 2
    assert col0 == pytest.approx(1.0, abs=1e-12)


def test_csv_writers():
    state = sc.StateVector.basis(4, 1)
    csv = sc.amplitudes_csv(state, state)
    lines = csv.strip().split("\n")
    assert lines[0] == "alpha,bitstring,re,im,re_ideal,im_ideal,re_diff,im_diff"
    assert len(lines) == 17
