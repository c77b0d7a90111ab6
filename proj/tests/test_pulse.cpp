#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "spinchain/pulse.hpp"
#include "support/fixtures.hpp"

using namespace spinchain;
using spinchain::testing::linf_distance;
using spinchain::testing::reference_config;

namespace {

constexpr double kPi = std::numbers::pi;

StateVector random_state(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss;
  StateVector s = StateVector::zero(n);
  for (Complex& amp : s.amps) amp = Complex{gauss(rng), gauss(rng)};
  const double scale = 1.0 / std::sqrt(norm_squared(s));
  for (Complex& amp : s.amps) amp *= scale;
  return s;
}

}  // namespace

TEST_CASE("pulse binding is checked against the offset table") {
  const ChainConfig& cfg = reference_config();
  CHECK_NOTHROW(validate_pulse(cfg, Pulse{2, 2, 1, kPi, 0.0, 0.1}));
  // mu = +-2 is impossible at a chain end
  CHECK_THROWS_AS(validate_pulse(cfg, Pulse{0, 2, 1, kPi, 0.0, 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(validate_pulse(cfg, Pulse{2, 2, 2, kPi, 0.0, 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(validate_pulse(cfg, Pulse{2, 2, 1, -1.0, 0.0, 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(validate_pulse(cfg, Pulse{2, 2, 1, kPi, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("transition classification reproduces the five detuning classes") {
  const ChainConfig& cfg = reference_config();
  const Pulse pulse{1, 0, 1, kPi, kPi / 2, 0.1};
  REQUIRE(pulse.drive_frequency(cfg) == doctest::Approx(200.4));

  const auto blocks = classify_transitions(cfg, pulse);
  REQUIRE(blocks.size() == 8);

  // sorted by alpha0, partner is the bit-1 flip
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    CHECK(blocks[i].alpha1 == (blocks[i].alpha0 | 2));
    if (i > 0) CHECK(blocks[i].alpha0 > blocks[i - 1].alpha0);
    // the detuning belongs to the pair, not to one member
    CHECK(blocks[i].delta == detuning(cfg, pulse.drive_frequency(cfg), 1, blocks[i].alpha1));
  }

  std::vector<double> magnitudes;
  for (const auto& block : blocks) magnitudes.push_back(std::abs(block.delta));
  std::sort(magnitudes.begin(), magnitudes.end());
  const std::vector<double> expected = {0.0, 0.0, 0.8, 0.8, 19.2, 20.0, 20.0, 20.8};
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(magnitudes[i] == doctest::Approx(expected[i]).epsilon(1e-12));

  int resonant = 0;
  for (const auto& block : blocks)
    if (block.cls == BlockClass::resonant) ++resonant;
  CHECK(resonant == 2);
  // every coupling-induced shift here is within 2(J + J'), so no block is far
  for (const auto& block : blocks) CHECK(block.cls != BlockClass::far_resonant);
}

TEST_CASE("classification on the two-qubit nearest-neighbor chain") {
  ChainConfig cfg{2, {100, 200}, 10.0, 0.0};
  const Pulse pulse{0, 1, 0, kPi, 0.0, 0.1};
  const auto blocks = classify_transitions(cfg, pulse);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].alpha0 == 0);
  CHECK(blocks[0].delta == doctest::Approx(0.0));
  CHECK(blocks[0].cls == BlockClass::resonant);
  CHECK(blocks[1].alpha0 == 2);
  // the neighbor-flipped line sits 2J below the drive
  CHECK(blocks[1].delta == doctest::Approx(2.0 * cfg.j1).epsilon(1e-12));
  CHECK(blocks[1].cls == BlockClass::near_resonant);
}

TEST_CASE("block propagator closed form") {
  SUBCASE("resonant pi-pulse, phi = pi/2") {
    const BlockUnitary u = block_propagator(0.0, 0.1, kPi / 2, kPi / 0.1);
    CHECK(std::abs(u.m00) < 1e-12);
    CHECK(std::abs(u.m01 - Complex{-1.0, 0.0}) < 1e-12);
    CHECK(std::abs(u.m10 - Complex{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(u.m11) < 1e-12);
  }
  SUBCASE("resonant half-pi pulse, phi = -pi/2") {
    const double r = 1.0 / std::sqrt(2.0);
    const BlockUnitary u = block_propagator(0.0, 0.2, -kPi / 2, (kPi / 2) / 0.2);
    CHECK(std::abs(u.m00 - Complex{r, 0.0}) < 1e-12);
    CHECK(std::abs(u.m01 - Complex{r, 0.0}) < 1e-12);
    CHECK(std::abs(u.m10 - Complex{-r, 0.0}) < 1e-12);
    CHECK(std::abs(u.m11 - Complex{r, 0.0}) < 1e-12);
  }
  SUBCASE("whole-revolution null: off-diagonals vanish, diagonals keep the detuning phase") {
    const double delta = 0.8;
    const double rabi = 0.8 / std::sqrt(15.0);
    const double t = kPi / rabi;
    const BlockUnitary u = block_propagator(delta, rabi, 0.3, t);
    CHECK(std::abs(u.m01) < 1e-12);
    CHECK(std::abs(u.m10) < 1e-12);
    CHECK(std::abs(u.m00 - std::polar(1.0, 0.5 * delta * t)) < 1e-12);
    CHECK(std::abs(u.m11 - std::polar(1.0, -0.5 * delta * t)) < 1e-12);
  }
  SUBCASE("unitary for random parameters") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
      const double delta = 25.0 * uni(rng);
      const double rabi = 0.01 + 2.0 * std::abs(uni(rng));
      const double phi = kPi * uni(rng);
      const double t = 40.0 * std::abs(uni(rng));
      const BlockUnitary u = block_propagator(delta, rabi, phi, t);
      const Complex col0_norm = std::conj(u.m00) * u.m00 + std::conj(u.m10) * u.m10;
      const Complex col1_norm = std::conj(u.m01) * u.m01 + std::conj(u.m11) * u.m11;
      const Complex cross = std::conj(u.m00) * u.m01 + std::conj(u.m10) * u.m11;
      CHECK(std::abs(col0_norm - 1.0) < 1e-12);
      CHECK(std::abs(col1_norm - 1.0) < 1e-12);
      CHECK(std::abs(cross) < 1e-12);
    }
  }
  CHECK_THROWS_AS(block_propagator(0.1, 0.0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("ideal application") {
  const ChainConfig& cfg = reference_config();

  SUBCASE("the first superposition pulse") {
    const Pulse pulse{2, 2, 1, kPi / 2, kPi / 2, 0.1};
    const StateVector out = apply_ideal(cfg, pulse, StateVector::basis(4, 0));
    const double r = 1.0 / std::sqrt(2.0);
    for (int alpha = 0; alpha < 16; ++alpha) {
      const Complex want = (alpha == 0 || alpha == 4) ? Complex{r, 0.0} : Complex{0.0, 0.0};
      CHECK(std::abs(out.amps[alpha] - want) < 1e-12);
    }
  }
  SUBCASE("phi + pi inverts the rotation") {
    const StateVector state = random_state(4, 11);
    Pulse pulse{1, -2, 1, 1.234, 0.4, 0.1};
    Pulse inverse = pulse;
    inverse.phi += kPi;
    const StateVector back = apply_ideal(cfg, inverse, apply_ideal(cfg, pulse, state));
    CHECK(linf_distance(back, state) < 1e-12);
  }
  SUBCASE("resonant blocks without amplitude leave the state untouched") {
    // drive resonant with (0, 4) only; support elsewhere
    const Pulse pulse{2, 2, 1, kPi, kPi / 2, 0.1};
    const StateVector state = StateVector::basis(4, 1);
    const StateVector out = apply_ideal(cfg, pulse, state);
    CHECK(linf_distance(out, state) == 0.0);
  }
  SUBCASE("norm preserved on random states") {
    const Pulse pulse{0, 1, 1, kPi, kPi / 2, 0.1};
    const StateVector out = apply_ideal(cfg, pulse, random_state(4, 3));
    CHECK(norm_squared(out) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("block application") {
  const ChainConfig& cfg = reference_config();

  SUBCASE("whole-revolution Rabi frequencies switch the 2J' pairs off") {
    for (int k = 1; k <= 3; ++k) {
      const double rabi = optimal_rabi(2.0 * cfg.j2, k, PulseAngle::pi);
      const Pulse pulse{0, 1, 1, kPi, kPi / 2, rabi};
      // pair (4, 5) is detuned by exactly 2J' for this drive
      const StateVector out = apply_block(cfg, pulse, StateVector::basis(4, 4));
      CHECK(std::norm(out.amps[5]) < 1e-12);
    }
  }
  SUBCASE("identical to ideal when only resonant blocks are occupied") {
    const Pulse pulse{2, 2, 1, kPi / 2, kPi / 2, 0.1};
    const StateVector state = StateVector::basis(4, 0);
    CHECK(linf_distance(apply_block(cfg, pulse, state), apply_ideal(cfg, pulse, state)) == 0.0);
  }
  SUBCASE("single block on n = 2 equals the closed form") {
    ChainConfig two{2, {100, 200}, 10.0, 0.0};
    const Pulse pulse{0, 1, 0, 2.1, 0.7, 0.3};
    const StateVector in = StateVector::basis(2, 0);
    const StateVector out = apply_block(two, pulse, in);
    const BlockUnitary u = block_propagator(0.0, pulse.rabi, pulse.phi, pulse.duration());
    CHECK(std::abs(out.amps[0] - u.m00) < 1e-14);
    CHECK(std::abs(out.amps[1] - u.m10) < 1e-14);
  }
  SUBCASE("near-resonant transition probability is bounded by the Rabi formula") {
    const Pulse pulse{1, 0, 1, kPi, kPi / 2, 0.25};
    for (const TransitionBlock& block : classify_transitions(cfg, pulse)) {
      if (block.cls != BlockClass::near_resonant) continue;
      const StateVector out = apply_block(cfg, pulse, StateVector::basis(4, block.alpha0));
      const double bound = pulse.rabi * pulse.rabi /
                           (pulse.rabi * pulse.rabi + block.delta * block.delta);
      CHECK(std::norm(out.amps[block.alpha1]) <= bound + 1e-12);
    }
  }
  SUBCASE("norm preserved exactly") {
    const Pulse pulse{1, 0, 1, kPi, kPi / 2, 0.1};
    const StateVector out = apply_block(cfg, pulse, random_state(4, 5));
    CHECK(norm_squared(out) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("sequential block application equals the matrix product on n = 2") {
  ChainConfig cfg{2, {100, 200}, 10.0, 0.0};
  const std::vector<Pulse> pulses = {
      {0, 1, 0, kPi / 2, kPi / 2, 0.2},
      {1, -1, 0, kPi, -kPi / 2, 0.15},
      {0, -1, 0, 1.9, 0.3, 0.25},
  };

  // accumulate the 4x4 product of per-pulse block unitaries
  std::array<std::array<Complex, 4>, 4> product{};
  for (int i = 0; i < 4; ++i) product[i][i] = 1.0;
  for (const Pulse& pulse : pulses) {
    std::array<std::array<Complex, 4>, 4> step{};
    for (int i = 0; i < 4; ++i) step[i][i] = 1.0;
    for (const TransitionBlock& block : classify_transitions(cfg, pulse)) {
      if (block.cls == BlockClass::far_resonant) continue;
      const double delta = block.cls == BlockClass::resonant ? 0.0 : block.delta;
      const BlockUnitary u = block_propagator(delta, pulse.rabi, pulse.phi, pulse.duration());
      step[block.alpha0][block.alpha0] = u.m00;
      step[block.alpha0][block.alpha1] = u.m01;
      step[block.alpha1][block.alpha0] = u.m10;
      step[block.alpha1][block.alpha1] = u.m11;
    }
    std::array<std::array<Complex, 4>, 4> next{};
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        for (int m = 0; m < 4; ++m) next[r][c] += step[r][m] * product[m][c];
    product = next;
  }

  const StateVector state = random_state(2, 21);
  StateVector sequential = state;
  for (const Pulse& pulse : pulses) sequential = apply_block(cfg, pulse, sequential);

  for (int r = 0; r < 4; ++r) {
    Complex want{0.0, 0.0};
    for (int c = 0; c < 4; ++c) want += product[r][c] * state.amps[c];
    CHECK(std::abs(sequential.amps[r] - want) < 1e-12);
  }
}

TEST_CASE("whole-revolution Rabi frequencies") {
  CHECK(optimal_rabi(0.8, 1, PulseAngle::pi) == doctest::Approx(0.46188).epsilon(1e-5));
  CHECK(optimal_rabi(0.8, 4, PulseAngle::pi) == doctest::Approx(0.100791).epsilon(1e-5));
  CHECK(optimal_rabi(0.8, 1, PulseAngle::half_pi) == doctest::Approx(0.20656).epsilon(1e-5));

  CHECK(optimal_rabi(0.8, 2, PulseAngle::pi) == doctest::Approx(0.8 / std::sqrt(15.0)));
  CHECK(optimal_rabi(-0.8, 2, PulseAngle::pi) == doctest::Approx(0.8 / std::sqrt(15.0)));
  // a half-pi pulse lasts half as long, so the null needs twice the turns
  CHECK(optimal_rabi(0.8, 1, PulseAngle::half_pi) ==
        doctest::Approx(optimal_rabi(0.8, 2, PulseAngle::pi)));

  CHECK_THROWS_AS(optimal_rabi(0.0, 1, PulseAngle::pi), std::invalid_argument);
  CHECK_THROWS_AS(optimal_rabi(0.8, 0, PulseAngle::pi), std::invalid_argument);
}
