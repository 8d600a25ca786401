#include "bvnoise/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "bvnoise/analytic.hpp"
#include "bvnoise/density.hpp"
#include "bvnoise/factorized.hpp"
#include "bvnoise/monte_carlo.hpp"
#include "bvnoise/rng.hpp"

namespace bvnoise {

HiddenString HiddenStringChoice::resolve(std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("qubit count must be >= 1");
  const auto size = static_cast<std::size_t>(n);
  switch (kind) {
    case Kind::AllOnes:
      return HiddenString::all_ones(size);
    case Kind::Explicit: {
      HiddenString s = HiddenString::parse(bits);
      if (s.size() != size) {
        throw std::invalid_argument("hidden string '" + bits + "' has " + std::to_string(s.size()) +
                                    " bits but n = " + std::to_string(n));
      }
      return s;
    }
    case Kind::Random:
      return HiddenString::random(size, mix64(seed ^ static_cast<std::uint64_t>(n)));
  }
  throw std::logic_error("unknown hidden string kind");
}

std::uint64_t grid_point_seed(std::uint64_t seed, std::int64_t n, std::size_t p_index) {
  const auto index = (static_cast<std::uint64_t>(n) << 24) ^ static_cast<std::uint64_t>(p_index);
  return CounterRng::for_stream(seed, index).key();
}

std::vector<double> linear_grid(double p_min, double p_max, int steps) {
  if (steps < 2) throw std::invalid_argument("a p-range needs at least 2 steps");
  if (!(p_min <= p_max)) throw std::invalid_argument("p-min must not exceed p-max");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    grid[k] = p_min + (p_max - p_min) * static_cast<double>(k) / static_cast<double>(steps - 1);
  }
  grid.back() = p_max;
  return grid;
}

std::vector<SweepRecord> run_sweep(const SweepOptions& options) {
  std::vector<std::int64_t> ns = options.n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  struct Point {
    std::int64_t n;
    double p;
    std::size_t p_index;
  };
  std::vector<std::pair<double, std::size_t>> ps;
  for (std::size_t i = 0; i < options.p_values.size(); ++i) ps.emplace_back(options.p_values[i], i);
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end(),
                       [](const auto& a, const auto& b) { return a.first == b.first; }),
           ps.end());

  std::vector<Point> points;
  for (auto n : ns) {
    (void)options.hidden.resolve(n);  // reject a mismatched --s before any work
    for (const auto& [p, idx] : ps) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("error probability must lie in [0, 1], got " + std::to_string(p));
      }
      points.push_back({n, p, idx});
    }
  }

  std::vector<SweepRecord> records(points.size());
  auto evaluate = [&](std::size_t i) {
    const Point& pt = points[i];
    const HiddenString s = options.hidden.resolve(pt.n);
    SweepRecord r;
    r.n = pt.n;
    r.p = pt.p;
    const ProbabilityResult analytic = success_probability(pt.n, pt.p);
    r.analytic = analytic.probability;
    r.log2_prob = analytic.log2_probability;
    r.factorized = success_probability_factorized(s, pt.p).probability;
    if (options.with_full && pt.n <= kMaxQubits) {
      r.full_sim = measure_probability(run_bv_full(s, pt.p), s);
    }
    if (options.with_mc) {
      TrajectoryConfig cfg{s, pt.p, options.shots, grid_point_seed(options.seed, pt.n, pt.p_index)};
      const McEstimate est = estimate_success(cfg, 1);
      r.mc_estimate = est.estimate;
      r.mc_stderr = est.stderr_;
    }
    records[i] = r;
  };

  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, points.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) evaluate(i);
    return records;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
          try {
            evaluate(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::vector<ThresholdRecord> run_threshold_curve(std::int64_t n_max, double target) {
  if (n_max < 1) throw std::invalid_argument("n-max must be >= 1");
  std::vector<ThresholdRecord> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const ThresholdResult t = threshold_p(n, target);
    rows.push_back({n, t.p_star, t.p_closed_form, threshold_small_p_approx(n, target), t.residual});
  }
  return rows;
}

LineChart chart_success_vs_p(const std::vector<SweepRecord>& records) {
  LineChart chart;
  chart.title = "Success probability vs depolarizing error probability";
  chart.x_label = "error probability p";
  chart.y_label = "success probability";
  std::map<std::int64_t, ChartSeries> by_n;
  for (const auto& r : records) {
    auto& s = by_n[r.n];
    s.name = "n = " + std::to_string(r.n);
    s.points.emplace_back(r.p, r.analytic);
  }
  for (auto& [n, s] : by_n) chart.series.push_back(std::move(s));
  return chart;
}

LineChart chart_success_vs_n(const std::vector<SweepRecord>& records) {
  LineChart chart;
  chart.title = "Success probability vs number of qubits";
  chart.x_label = "number of qubits n";
  chart.y_label = "success probability";
  std::map<double, ChartSeries> by_p;
  for (const auto& r : records) {
    auto& s = by_p[r.p];
    s.name = "p = " + format_number(r.p);
    s.points.emplace_back(static_cast<double>(r.n), r.analytic);
  }
  for (auto& [p, s] : by_p) chart.series.push_back(std::move(s));
  return chart;
}

LineChart chart_threshold(const std::vector<ThresholdRecord>& records, double target) {
  LineChart chart;
  chart.title = "Maximum error probability for success probability " + format_number(target);
  chart.x_label = "number of qubits n";
  chart.y_label = "threshold p*";
  ChartSeries exact{"exact p*", {}};
  ChartSeries approx{"small-p estimate", {}};
  for (const auto& r : records) {
    exact.points.emplace_back(static_cast<double>(r.n), r.p_star);
    approx.points.emplace_back(static_cast<double>(r.n), r.p_approx);
  }
  chart.series = {std::move(exact), std::move(approx)};
  return chart;
}

}  // namespace bvnoise
