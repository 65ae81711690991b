#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "scsgen/oracle.hpp"
#include "scsgen/optimizer.hpp"

namespace scsgen {

using Cell = std::variant<double, long long, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Provenance written ahead of the data: generator version, command, wall-clock timestamp
// and the effective run configuration (a JSON object).
struct ReportHeader {
  std::string command;
  std::string config_json;
  std::string version = SCSGEN_VERSION;
  std::string timestamp;
  // Extra named values (written as '#' lines in CSV and as a "summary" object in JSON).
  std::vector<std::pair<std::string, Cell>> summary;
};

std::string current_timestamp();

// 12 significant digits; non-finite values print as inf, -inf, nan.
std::string format_number(double v);

// '#'-prefixed header lines, one column line, then one line per row.
void write_csv(std::ostream& os, const ReportHeader& header, const Table& table);
// {"generator", "version", "command", "timestamp", "config", "columns", "rows"}; every row
// is an object keyed by column name holding the same values as the CSV.
void write_json(std::ostream& os, const ReportHeader& header, const Table& table);

// beta, k1, k2, B_opt, S_opt_dB, fid_max, probability, converged (+ evaluations, failure)
Table sweep_table(const std::vector<OptimizationResult>& rows);
// beta, k1, k2, fid11, fid00, g_dB, p11, p00, j_dB, baseline_S_dB (+ feasible, flag)
Table gain_table(const std::vector<GainMetrics>& rows);
// k1, k2, probability, parity, feasible
Table distribution_table(const std::vector<HeraldOutcome>& rows);

}  // namespace scsgen
