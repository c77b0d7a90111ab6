#include "spinchain/chain.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spinchain {

namespace {

// (-1)^{alpha_l} with out-of-chain terms dropped, per the boundary rule
// of the resonance condition.
int sign_term(int alpha, int l, int n) {
  if (l < 0 || l >= n) return 0;
  return ((alpha >> l) & 1) ? -1 : 1;
}

void check_qubit(const ChainConfig& config, int k) {
  if (k < 0 || k >= config.n)
    throw std::out_of_range("qubit index out of range: " + std::to_string(k));
}

void check_basis(const ChainConfig& config, int alpha) {
  if (alpha < 0 || alpha >= dimension(config))
    throw std::out_of_range("basis index out of range: " + std::to_string(alpha));
}

}  // namespace

int dimension(const ChainConfig& config) { return 1 << config.n; }

bool qubit_bit(int alpha, int k) { return (alpha >> k) & 1; }

std::string basis_label(int n, int alpha) {
  std::string label(n, '0');
  for (int j = 0; j < n; ++j)
    if (qubit_bit(alpha, j)) label[n - 1 - j] = '1';
  return label;
}

double energy_of(const ChainConfig& config, int alpha) {
  check_basis(config, alpha);
  double zeeman = 0.0;
  for (int k = 0; k < config.n; ++k)
    zeeman += (qubit_bit(alpha, k) ? -1.0 : 1.0) * config.larmor[k];
  double first = 0.0;
  for (int k = 0; k + 1 < config.n; ++k)
    first += (qubit_bit(alpha, k) == qubit_bit(alpha, k + 1)) ? 1.0 : -1.0;
  double second = 0.0;
  for (int k = 0; k + 2 < config.n; ++k)
    second += (qubit_bit(alpha, k) == qubit_bit(alpha, k + 2)) ? 1.0 : -1.0;
  return -0.5 * (zeeman + config.j1 * first + config.j2 * second);
}

double transition_frequency(const ChainConfig& config, int k, int alpha) {
  check_qubit(config, k);
  check_basis(config, alpha);
  const int mu = sign_term(alpha, k + 1, config.n) + sign_term(alpha, k - 1, config.n);
  const int nu = sign_term(alpha, k + 2, config.n) + sign_term(alpha, k - 2, config.n);
  return config.larmor[k] + config.j1 * mu + config.j2 * nu;
}

std::pair<int, int> transition_offsets(const ChainConfig& config, int k, int alpha) {
  check_qubit(config, k);
  check_basis(config, alpha);
  const int mu = sign_term(alpha, k + 1, config.n) + sign_term(alpha, k - 1, config.n);
  int nu = sign_term(alpha, k + 2, config.n) + sign_term(alpha, k - 2, config.n);
  if (config.j2 == 0.0) nu = 0;
  return {mu, nu};
}

double detuning(const ChainConfig& config, double drive_w, int k, int alpha) {
  return drive_w - transition_frequency(config, k, alpha);
}

bool OffsetSet::contains(int mu_value, int nu_value) const {
  return std::find(mu.begin(), mu.end(), mu_value) != mu.end() &&
         std::find(nu.begin(), nu.end(), nu_value) != nu.end();
}

std::vector<std::pair<int, int>> OffsetSet::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(mu.size() * nu.size());
  for (int m : mu)
    for (int v : nu) out.emplace_back(m, v);
  return out;
}

OffsetSet allowed_offsets(const ChainConfig& config, int k) {
  check_qubit(config, k);
  const int firsts = (k - 1 >= 0 ? 1 : 0) + (k + 1 < config.n ? 1 : 0);
  const int seconds = (k - 2 >= 0 ? 1 : 0) + (k + 2 < config.n ? 1 : 0);
  OffsetSet set;
  set.mu = (firsts == 2) ? std::vector<int>{-2, 0, 2} : std::vector<int>{-1, 1};
  if (seconds == 0 || config.j2 == 0.0)
    set.nu = {0};
  else
    set.nu = (seconds == 2) ? std::vector<int>{-2, 0, 2} : std::vector<int>{-1, 1};
  return set;
}

std::vector<std::string> validate_config(const ChainConfig& config) {
  if (config.n < 2) throw std::invalid_argument("chain needs at least 2 qubits");
  if (static_cast<int>(config.larmor.size()) != config.n)
    throw std::invalid_argument("expected " + std::to_string(config.n) +
                                " larmor frequencies, got " +
                                std::to_string(config.larmor.size()));
  for (double w : config.larmor)
    if (!(w > 0.0)) throw std::invalid_argument("larmor frequencies must be positive");
  if (config.j2 < 0.0) throw std::invalid_argument("j2 must be non-negative");
  if (!(config.j1 > config.j2))
    throw std::invalid_argument("couplings must satisfy j1 > j2 >= 0");

  const double w_max = *std::max_element(config.larmor.begin(), config.larmor.end());
  const double tol = 1e-9 * w_max;

  for (int a = 0; a < config.n; ++a)
    for (int b = a + 1; b < config.n; ++b)
      if (std::abs(config.larmor[a] - config.larmor[b]) < tol)
        throw std::invalid_argument("larmor frequencies of qubits " + std::to_string(a) +
                                    " and " + std::to_string(b) + " coincide");

  // Degeneracy scan: every addressable line w_k + mu*J + nu*J' must be
  // isolated, otherwise a drive cannot single out one transition class.
  struct Line {
    double freq;
    int k, mu, nu;
  };
  std::vector<Line> lines;
  for (int k = 0; k < config.n; ++k)
    for (auto [mu, nu] : allowed_offsets(config, k).pairs())
      lines.push_back({config.larmor[k] + mu * config.j1 + nu * config.j2, k, mu, nu});
  std::sort(lines.begin(), lines.end(),
            [](const Line& a, const Line& b) { return a.freq < b.freq; });
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    const Line& a = lines[i];
    const Line& b = lines[i + 1];
    if (b.freq - a.freq < tol) {
      std::ostringstream msg;
      msg << "degenerate transition spectrum: qubit " << a.k << " (mu=" << a.mu
          << ", nu=" << a.nu << ") and qubit " << b.k << " (mu=" << b.mu << ", nu=" << b.nu
          << ") both sit at frequency " << a.freq;
      throw std::invalid_argument(msg.str());
    }
  }

  std::vector<std::string> warnings;
  if (config.j2 == 0.0)
    warnings.push_back(
        "j2 = 0: second-neighbor offsets are disabled, the chain reduces to a "
        "nearest-neighbor model");
  return warnings;
}

}  // namespace spinchain
