#include "bvnoise/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace bvnoise {

namespace {

using Amp = std::complex<double>;

struct Qubit {
  Amp a0{1.0, 0.0};
  Amp a1{0.0, 0.0};

  void hadamard() {
    constexpr double h = 0.70710678118654752440;
    const Amp b0 = h * (a0 + a1);
    const Amp b1 = h * (a0 - a1);
    a0 = b0;
    a1 = b1;
  }

  void apply(Pauli op) {
    switch (op) {
      case Pauli::I:
        break;
      case Pauli::X:
        std::swap(a0, a1);
        break;
      case Pauli::Y: {
        // Y = [[0, -i], [i, 0]]
        const Amp i{0.0, 1.0};
        const Amp b0 = -i * a1;
        const Amp b1 = i * a0;
        a0 = b0;
        a1 = b1;
        break;
      }
      case Pauli::Z:
        a1 = -a1;
        break;
    }
  }
};

int sample_qubit(int bit, double p, CounterRng& rng) {
  Qubit q;
  q.hadamard();
  q.apply(sample_pauli(rng.uniform(), p));
  if (bit) q.apply(Pauli::Z);
  q.apply(sample_pauli(rng.uniform(), p));
  q.hadamard();
  q.apply(sample_pauli(rng.uniform(), p));
  return rng.uniform() < std::norm(q.a1) ? 1 : 0;
}

// Consumes every draw of the shot, so the stream matches sample_run.
bool shot_succeeds(const HiddenString& s, double p, CounterRng& rng) {
  bool ok = true;
  for (auto bit : s.bits()) ok = (sample_qubit(bit, p, rng) == bit) && ok;
  return ok;
}

}  // namespace

void TrajectoryConfig::validate() const {
  if (shots == 0) throw std::invalid_argument("shots must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("error probability must lie in [0, 1], got " + std::to_string(p));
  }
}

Pauli sample_pauli(double u, double p) {
  const double quarter = 0.25 * p;
  const double keep = 1.0 - 3.0 * quarter;
  if (u < keep) return Pauli::I;
  if (u < keep + quarter) return Pauli::X;
  if (u < keep + 2.0 * quarter) return Pauli::Y;
  return Pauli::Z;
}

HiddenString sample_run(const HiddenString& s, double p, CounterRng& rng) {
  std::vector<std::uint8_t> out;
  out.reserve(s.size());
  for (auto bit : s.bits()) out.push_back(static_cast<std::uint8_t>(sample_qubit(bit, p, rng)));
  return HiddenString(std::move(out));
}

McEstimate estimate_success(const TrajectoryConfig& cfg, unsigned threads) {
  cfg.validate();
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, cfg.shots));

  auto count_range = [&cfg](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t hits = 0;
    for (std::uint64_t shot = begin; shot < end; ++shot) {
      CounterRng rng = CounterRng::for_stream(cfg.seed, shot);
      if (shot_succeeds(cfg.s, cfg.p, rng)) ++hits;
    }
    return hits;
  };

  std::uint64_t successes = 0;
  if (threads <= 1) {
    successes = count_range(0, cfg.shots);
  } else {
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    const std::uint64_t chunk = (cfg.shots + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = std::min(cfg.shots, t * chunk);
      const std::uint64_t end = std::min(cfg.shots, begin + chunk);
      pool.emplace_back([&, t, begin, end] { partial[t] = count_range(begin, end); });
    }
    pool.clear();
    for (auto c : partial) successes += c;
  }

  McEstimate est;
  est.shots = cfg.shots;
  est.seed = cfg.seed;
  est.successes = successes;
  est.estimate = static_cast<double>(successes) / static_cast<double>(cfg.shots);
  est.stderr_ = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(cfg.shots));
  return est;
}

}  // namespace bvnoise
