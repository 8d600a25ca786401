#include "bvnoise/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <stdexcept>

#include "bvnoise/analytic.hpp"
#include "bvnoise/csv.hpp"
#include "bvnoise/density.hpp"
#include "bvnoise/factorized.hpp"
#include "bvnoise/monte_carlo.hpp"
#include "bvnoise/svg.hpp"
#include "bvnoise/sweep.hpp"
#include "bvnoise/verify.hpp"

namespace bvnoise {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flag values; which ones are meaningful depends on the subcommand.
struct RunConfig {
  std::optional<std::int64_t> n;
  std::vector<std::int64_t> n_list;
  std::optional<std::int64_t> n_max;
  std::optional<std::string> s;
  bool random_s = false;
  std::optional<double> p;
  std::vector<double> p_list;
  double p_min = 0.0;
  std::optional<double> p_max;
  int steps = 101;
  std::vector<std::string> backends;
  std::uint64_t shots = 100000;
  std::uint64_t seed = 0;
  double target = kDefaultTarget;
  double tolerance = 1e-10;
  std::optional<std::string> out;
  bool svg = false;
  std::string y_scale = "auto";
  unsigned threads = 0;
};

const std::set<std::string> kBackends{"analytic", "full", "factorized", "mc"};

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

std::set<std::string> backend_set(const RunConfig& cfg, const char* fallback) {
  std::set<std::string> set(cfg.backends.begin(), cfg.backends.end());
  if (set.empty()) set.insert(fallback);
  return set;
}

HiddenStringChoice hidden_choice(const RunConfig& cfg) {
  if (cfg.s && cfg.random_s) throw UsageError("--s and --random-s are mutually exclusive");
  HiddenStringChoice choice;
  if (cfg.s) {
    choice.kind = HiddenStringChoice::Kind::Explicit;
    choice.bits = *cfg.s;
  } else if (cfg.random_s) {
    choice.kind = HiddenStringChoice::Kind::Random;
    choice.seed = cfg.seed;
  }
  return choice;
}

YScale parse_y_scale(const std::string& text) {
  if (text == "linear") return YScale::Linear;
  if (text == "log") return YScale::Log;
  return YScale::Auto;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputError("cannot open '" + path.string() + "' for writing");
  file << content;
  file.flush();
  if (!file) throw OutputError("failed writing '" + path.string() + "'");
}

// CSV goes to --out or to `out`; the SVG (if requested) sits next to the CSV.
void emit(const RunConfig& cfg, const CsvTable& table, LineChart chart, std::ostream& out) {
  const std::string csv = to_csv_string(table);
  if (cfg.svg && !cfg.out) throw UsageError("--svg needs --out to place the chart file");
  if (cfg.out) {
    write_file(*cfg.out, csv);
  } else {
    out << csv;
  }
  if (cfg.svg) {
    chart.y_scale = parse_y_scale(cfg.y_scale);
    std::filesystem::path svg_path(*cfg.out);
    svg_path.replace_extension(".svg");
    write_file(svg_path, render_svg(chart));
  }
}

void check_shots(const RunConfig& cfg) {
  if (cfg.shots < 1) throw UsageError("--shots must be >= 1");
}

void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw UsageError("error probability must lie in [0, 1]");
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.p) throw UsageError("simulate needs --p");
  check_p(*cfg.p);
  std::int64_t n = 0;
  if (cfg.n) {
    n = *cfg.n;
  } else if (cfg.s) {
    n = static_cast<std::int64_t>(cfg.s->size());
  } else {
    throw UsageError("simulate needs --n or --s");
  }
  if (n < 1) throw UsageError("--n must be >= 1");
  const auto backends = backend_set(cfg, "analytic");
  if (backends.count("full") && n > kMaxQubits) {
    throw UsageError("the full backend is capped at " + std::to_string(kMaxQubits) +
                     " qubits (got n = " + std::to_string(n) + ")");
  }
  if (backends.count("mc")) check_shots(cfg);

  HiddenString s = HiddenString::all_ones(1);
  try {
    s = hidden_choice(cfg).resolve(n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const double p = *cfg.p;

  out << "n = " << n << '\n';
  out << "s = " << s.to_string() << '\n';
  out << "p = " << format_number(p) << '\n';
  // Fixed order regardless of flag order.
  for (const char* name : {"analytic", "full", "factorized", "mc"}) {
    if (!backends.count(name)) continue;
    const std::string b = name;
    if (b == "analytic") {
      const auto r = success_probability(n, p);
      out << "success[analytic] = " << fixed12(r.probability) << " log2 = " << format_number(r.log2_probability)
          << '\n';
    } else if (b == "full") {
      out << "success[full] = " << fixed12(measure_probability(run_bv_full(s, p), s)) << '\n';
    } else if (b == "factorized") {
      const auto r = success_probability_factorized(s, p);
      out << "success[factorized] = " << fixed12(r.probability) << " log2 = "
          << format_number(r.log2_probability) << '\n';
    } else {
      const McEstimate est = estimate_success({s, p, cfg.shots, cfg.seed}, cfg.threads);
      out << "success[mc] = " << fixed12(est.estimate) << " stderr = " << format_number(est.stderr_)
          << " shots = " << est.shots << " seed = " << est.seed << '\n';
    }
  }
  return kExitOk;
}

SweepOptions sweep_options(const RunConfig& cfg) {
  SweepOptions opts;
  const auto backends = backend_set(cfg, "analytic");
  opts.with_full = backends.count("full") > 0;
  opts.with_mc = backends.count("mc") > 0;
  if (opts.with_mc) check_shots(cfg);
  opts.shots = cfg.shots;
  opts.seed = cfg.seed;
  opts.threads = cfg.threads;
  opts.hidden = hidden_choice(cfg);
  return opts;
}

int cmd_sweep_p(const RunConfig& cfg, std::ostream& out) {
  SweepOptions opts = sweep_options(cfg);
  const double p_max = cfg.p_max.value_or(1.0);
  if (!cfg.p_list.empty()) {
    opts.p_values = cfg.p_list;
  } else {
    if (cfg.steps < 2) throw UsageError("--steps must be >= 2");
    if (cfg.p_min < 0.0 || p_max > 1.0 || cfg.p_min > p_max) {
      throw UsageError("need 0 <= p-min <= p-max <= 1");
    }
    opts.p_values = linear_grid(cfg.p_min, p_max, cfg.steps);
  }
  for (double p : opts.p_values) check_p(p);
  if (!cfg.n_list.empty()) {
    opts.n_values = cfg.n_list;
  } else if (cfg.n) {
    opts.n_values = {*cfg.n};
  } else if (cfg.p_list.empty() && p_max <= 0.01) {
    opts.n_values = {1, 5, 10, 100, 1000};  // low-noise figure
  } else {
    opts.n_values = {1, 2, 5, 10, 20};
  }
  for (auto n : opts.n_values) {
    if (n < 1) throw UsageError("qubit counts must be >= 1");
  }
  std::vector<SweepRecord> records;
  try {
    records = run_sweep(opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(cfg, sweep_table(records), chart_success_vs_p(records), out);
  return kExitOk;
}

int cmd_sweep_n(const RunConfig& cfg, std::ostream& out) {
  SweepOptions opts = sweep_options(cfg);
  if (!cfg.p_list.empty()) {
    opts.p_values = cfg.p_list;
  } else if (cfg.p) {
    opts.p_values = {*cfg.p};
  } else {
    opts.p_values = {0.001, 0.01, 0.1};
  }
  for (double p : opts.p_values) check_p(p);
  const std::int64_t n_max = cfg.n_max.value_or(1000);
  if (n_max < 1) throw UsageError("--n-max must be >= 1");
  for (std::int64_t n = 1; n <= n_max; ++n) opts.n_values.push_back(n);
  if (cfg.s) throw UsageError("sweep-n spans several n; use the default or --random-s");
  std::vector<SweepRecord> records;
  try {
    records = run_sweep(opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(cfg, sweep_table(records), chart_success_vs_n(records), out);
  return kExitOk;
}

int cmd_threshold(const RunConfig& cfg, std::ostream& out) {
  const std::int64_t n_max = cfg.n_max.value_or(1000);
  if (n_max < 1) throw UsageError("--n-max must be >= 1");
  if (!(cfg.target > 0.0 && cfg.target < 1.0)) throw UsageError("--target must lie in (0, 1)");
  std::vector<ThresholdRecord> rows;
  try {
    rows = run_threshold_curve(n_max, cfg.target);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  emit(cfg, threshold_table(rows), chart_threshold(rows, cfg.target), out);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions opts;
  opts.n_max = static_cast<int>(cfg.n_max.value_or(6));
  if (opts.n_max < 1 || opts.n_max > kMaxQubits) {
    throw UsageError("verify --n-max must lie in 1.." + std::to_string(kMaxQubits));
  }
  if (!(cfg.tolerance > 0.0)) throw UsageError("--tolerance must be positive");
  check_shots(cfg);
  opts.tolerance = cfg.tolerance;
  opts.shots = cfg.shots;
  opts.seed = cfg.seed;
  return report_verification(run_verification(opts), out);
}

void add_hidden_flags(CLI::App* app, RunConfig& cfg) {
  app->add_option("--s", cfg.s, "hidden bit string, leftmost bit is qubit 1 (default all ones)");
  app->add_flag("--random-s", cfg.random_s, "draw the hidden string from --seed");
}

void add_backend_flags(CLI::App* app, RunConfig& cfg) {
  app->add_option("--backend", cfg.backends, "analytic, full, factorized, mc (comma separated)")
      ->delimiter(',')
      ->check(CLI::IsMember(kBackends));
  app->add_option("--shots", cfg.shots, "Monte Carlo shots")->check(CLI::PositiveNumber);
  app->add_option("--seed", cfg.seed, "random seed");
  app->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
}

void add_output_flags(CLI::App* app, RunConfig& cfg) {
  app->add_option("--out", cfg.out, "CSV output path (default stdout)");
  app->add_flag("--svg", cfg.svg, "also write an SVG chart next to --out");
  app->add_option("--y-scale", cfg.y_scale, "SVG y axis: auto, linear, log")
      ->check(CLI::IsMember({"auto", "linear", "log"}));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Bernstein-Vazirani success probability under depolarizing noise", "bvnoise"};
  app.require_subcommand(1);

  auto* simulate = app.add_subcommand("simulate", "success probability for one (n, s, p)");
  simulate->add_option("--n", cfg.n, "qubit count");
  simulate->add_option("--p", cfg.p, "depolarizing error probability");
  add_hidden_flags(simulate, cfg);
  add_backend_flags(simulate, cfg);

  auto* sweep_p = app.add_subcommand("sweep-p", "success probability over a p grid");
  sweep_p->add_option("--n", cfg.n, "single qubit count");
  sweep_p->add_option("--n-list", cfg.n_list, "qubit counts")->delimiter(',');
  sweep_p->add_option("--p-list", cfg.p_list, "explicit p values")->delimiter(',');
  sweep_p->add_option("--p-min", cfg.p_min, "grid start");
  sweep_p->add_option("--p-max", cfg.p_max, "grid end");
  sweep_p->add_option("--steps", cfg.steps, "grid points");
  add_hidden_flags(sweep_p, cfg);
  add_backend_flags(sweep_p, cfg);
  add_output_flags(sweep_p, cfg);

  auto* sweep_n = app.add_subcommand("sweep-n", "success probability over n = 1..n-max");
  sweep_n->add_option("--n-max", cfg.n_max, "largest qubit count (default 1000)");
  sweep_n->add_option("--p", cfg.p, "single p value");
  sweep_n->add_option("--p-list", cfg.p_list, "p values (default 0.001,0.01,0.1)")->delimiter(',');
  add_hidden_flags(sweep_n, cfg);
  add_backend_flags(sweep_n, cfg);
  add_output_flags(sweep_n, cfg);

  auto* threshold = app.add_subcommand("threshold", "largest p reaching a target success probability");
  threshold->add_option("--n-max", cfg.n_max, "largest qubit count (default 1000)");
  threshold->add_option("--target", cfg.target, "target success probability (default 2/3)");
  add_output_flags(threshold, cfg);

  auto* verify = app.add_subcommand("verify", "cross-backend verification suite");
  verify->add_option("--n-max", cfg.n_max, "largest n for full-density checks (default 6)");
  verify->add_option("--tolerance", cfg.tolerance, "cross-backend tolerance (default 1e-10)");
  verify->add_option("--shots", cfg.shots, "Monte Carlo shots per seed")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*simulate) return cmd_simulate(cfg, out);
    if (*sweep_p) return cmd_sweep_p(cfg, out);
    if (*sweep_n) return cmd_sweep_n(cfg, out);
    if (*threshold) return cmd_threshold(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"bvnoise"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace bvnoise
