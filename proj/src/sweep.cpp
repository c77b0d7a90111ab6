#include "spinchain/sweep.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace spinchain {

namespace {

int resolve_threads(int requested, int points) {
  int count = requested;
  if (count <= 0) {
    if (const char* env = std::getenv("SPINCHAIN_THREADS")) count = std::atoi(env);
  }
  if (count <= 0) count = static_cast<int>(std::thread::hardware_concurrency());
  if (count <= 0) count = 1;
  return std::min(count, points);
}

}  // namespace

std::vector<SweepPoint> sweep_rabi(const SweepSpec& spec, const IntegratorSettings& settings,
                                   int threads) {
  if (!(spec.omega_min > 0.0) || !(spec.omega_min < spec.omega_max))
    throw std::invalid_argument("sweep range must satisfy 0 < omega_min < omega_max");
  if (spec.points < 2) throw std::invalid_argument("sweep needs at least 2 points");
  validate_settings(settings);
  validate_sequence(spec.sequence);
  require_normalized(spec.initial);

  IntegratorSettings quiet = settings;
  quiet.trace_samples_per_pulse = 0;  // no per-point traces
  quiet.trace_stride = 0;

  std::vector<SweepPoint> points(spec.points);
  const double step = (spec.omega_max - spec.omega_min) / (spec.points - 1);

  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= spec.points || failed.load()) return;
      try {
        const double omega = spec.omega_min + i * step;
        const PulseSequence scaled = with_rabi(spec.sequence, omega);
        const RunResult full = run_sequence(scaled, spec.initial, EvolutionMode::full, quiet);
        const RunResult ideal = run_sequence(scaled, spec.initial, EvolutionMode::ideal, quiet);
        points[i] = {omega, fidelity(ideal.state, full.state)};
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };

  const int workers = resolve_threads(threads, spec.points);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return points;
}

}  // namespace spinchain
