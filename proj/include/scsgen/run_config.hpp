#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scsgen/optimizer.hpp"

namespace scsgen {

enum class OutputFormat { csv, json };

// Effective settings of one CLI run. Serialized into the header of every emitted file.
struct RunConfig {
  CutoffPolicy cutoff;
  double oracle_tolerance = 1e-9;
  SearchBox box;
  int grid_B = 40;
  int grid_S = 40;
  double simplex_tolerance = 1e-5;
  int max_evaluations = 500;
  BaselineSettings baseline;
  std::vector<double> baseline_S_dB{20.0, 9.0};
  OutputFormat format = OutputFormat::csv;
  std::string output;  // empty writes to stdout
  int threads = 1;

  OptimizerSettings optimizer_settings() const;
  BaselineSettings baseline_settings() const;
};

// Compact JSON object with every key of the schema.
std::string config_to_json(const RunConfig& config);

// Overlays the keys present in `json` onto `base`. Unknown keys and ill-typed values
// throw DomainError.
RunConfig config_from_json(std::string_view json, RunConfig base = {});

RunConfig load_config_file(const std::string& path, RunConfig base = {});

// "22,44,66" (two single digits per pattern) or "10:11,2:3".
std::vector<std::pair<int, int>> parse_patterns(std::string_view text);

// `steps` evenly spaced values from lo to hi inclusive.
std::vector<double> beta_grid(double lo, double hi, int steps);

OutputFormat parse_format(std::string_view name);
const char* to_string(OutputFormat f);

}  // namespace scsgen
