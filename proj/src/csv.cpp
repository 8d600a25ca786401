#include "bvnoise/csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace bvnoise {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string::size_type start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(line.substr(start));
      return cells;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

void expect_header(const CsvTable& table, const std::vector<std::string>& header) {
  if (table.header != header) throw std::runtime_error("unexpected CSV header");
}

double required(const std::string& cell, const char* column) {
  auto v = parse_cell(cell);
  if (!v) throw std::runtime_error(std::string("missing value in column ") + column);
  return *v;
}

std::int64_t parse_int(const std::string& cell) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
    throw std::runtime_error("bad integer cell '" + cell + "'");
  }
  return v;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string format_cell(const std::optional<double>& value) {
  return value ? format_number(*value) : std::string{};
}

std::optional<double> parse_cell(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(cell, &used);
  } catch (const std::out_of_range&) {
    // Subnormal values are representable but stod reports ERANGE.
    v = std::strtod(cell.c_str(), nullptr);
    used = cell.size();
  } catch (const std::invalid_argument&) {
    throw std::runtime_error("bad numeric cell '" + cell + "'");
  }
  if (used != cell.size()) throw std::runtime_error("bad numeric cell '" + cell + "'");
  return v;
}

void write_csv(std::ostream& out, const CsvTable& table) {
  auto write_row = [&out](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  };
  write_row(table.header);
  for (const auto& row : table.rows) write_row(row);
}

std::string to_csv_string(const CsvTable& table) {
  std::ostringstream os;
  write_csv(os, table);
  return os.str();
}

CsvTable parse_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV input");
  table.header = split_line(line);
  while (std::getline(in, line)) {
    auto cells = split_line(line);
    if (cells.size() != table.header.size()) {
      throw std::runtime_error("CSV row has " + std::to_string(cells.size()) +
                               " cells, header has " + std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

CsvTable parse_csv_string(const std::string& text) {
  std::istringstream is(text);
  return parse_csv(is);
}

CsvTable sweep_table(const std::vector<SweepRecord>& records) {
  CsvTable table{sweep_header(), {}};
  table.rows.reserve(records.size());
  for (const auto& r : records) {
    table.rows.push_back({std::to_string(r.n), format_number(r.p), format_number(r.analytic),
                          format_cell(r.full_sim), format_number(r.factorized),
                          format_cell(r.mc_estimate), format_cell(r.mc_stderr),
                          format_number(r.log2_prob)});
  }
  return table;
}

std::vector<SweepRecord> sweep_records(const CsvTable& table) {
  expect_header(table, sweep_header());
  std::vector<SweepRecord> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    SweepRecord r;
    r.n = parse_int(row[0]);
    r.p = required(row[1], "p");
    r.analytic = required(row[2], "analytic");
    r.full_sim = parse_cell(row[3]);
    r.factorized = required(row[4], "factorized");
    r.mc_estimate = parse_cell(row[5]);
    r.mc_stderr = parse_cell(row[6]);
    r.log2_prob = required(row[7], "log2_prob");
    out.push_back(r);
  }
  return out;
}

CsvTable threshold_table(const std::vector<ThresholdRecord>& records) {
  CsvTable table{threshold_header(), {}};
  table.rows.reserve(records.size());
  for (const auto& r : records) {
    table.rows.push_back({std::to_string(r.n), format_number(r.p_star),
                          format_number(r.p_closed_form), format_number(r.p_approx),
                          format_number(r.residual)});
  }
  return table;
}

std::vector<ThresholdRecord> threshold_records(const CsvTable& table) {
  expect_header(table, threshold_header());
  std::vector<ThresholdRecord> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    out.push_back({parse_int(row[0]), required(row[1], "p_star"),
                   required(row[2], "p_closed_form"), required(row[3], "p_approx"),
                   required(row[4], "residual")});
  }
  return out;
}

}  // namespace bvnoise
