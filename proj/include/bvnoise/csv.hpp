#ifndef BVNOISE_CSV_HPP_
#define BVNOISE_CSV_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bvnoise {

/// A CSV table of plain cells. Writing uses ',' separators and '\n' line
/// endings; cells never contain separators, quotes or newlines.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// 12 significant digits ("%.12g"), '.' decimal separator.
std::string format_number(double value);
std::string format_cell(const std::optional<double>& value);

void write_csv(std::ostream& out, const CsvTable& table);
std::string to_csv_string(const CsvTable& table);
/// Throws std::runtime_error on ragged rows or an empty input.
CsvTable parse_csv(std::istream& in);
CsvTable parse_csv_string(const std::string& text);

/// Parses a numeric cell; empty cells yield nullopt.
std::optional<double> parse_cell(const std::string& cell);

/// One row of figure data. Empty optionals are written as empty cells.
struct SweepRecord {
  std::int64_t n = 0;
  double p = 0.0;
  double analytic = 0.0;
  std::optional<double> full_sim;
  double factorized = 0.0;
  std::optional<double> mc_estimate;
  std::optional<double> mc_stderr;
  double log2_prob = 0.0;
};

inline const std::vector<std::string>& sweep_header() {
  static const std::vector<std::string> header{"n",          "p",           "analytic",
                                               "full_sim",   "factorized",  "mc_estimate",
                                               "mc_stderr",  "log2_prob"};
  return header;
}

CsvTable sweep_table(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> sweep_records(const CsvTable& table);

struct ThresholdRecord {
  std::int64_t n = 0;
  double p_star = 0.0;
  double p_closed_form = 0.0;
  double p_approx = 0.0;
  double residual = 0.0;
};

inline const std::vector<std::string>& threshold_header() {
  static const std::vector<std::string> header{"n", "p_star", "p_closed_form", "p_approx",
                                               "residual"};
  return header;
}

CsvTable threshold_table(const std::vector<ThresholdRecord>& records);
std::vector<ThresholdRecord> threshold_records(const CsvTable& table);

}  // namespace bvnoise

#endif  // BVNOISE_CSV_HPP_
