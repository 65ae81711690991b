#include "scsgen/run_config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>
#include <sstream>

#include "json.hpp"
#include "scsgen/errors.hpp"

namespace scsgen {

using nlohmann::json;

OptimizerSettings RunConfig::optimizer_settings() const {
  OptimizerSettings s;
  s.grid_B = grid_B;
  s.grid_S = grid_S;
  s.simplex_tolerance = simplex_tolerance;
  s.max_evaluations = max_evaluations;
  s.cutoff = cutoff;
  s.threads = threads;
  return s;
}

BaselineSettings RunConfig::baseline_settings() const {
  BaselineSettings b = baseline;
  b.cutoff = cutoff;
  return b;
}

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw DomainError("unknown output format '" + std::string(name) + "' (expected csv or json)");
}

std::vector<std::pair<int, int>> parse_patterns(std::string_view text) {
  std::vector<std::pair<int, int>> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string token(text.substr(pos, comma - pos));
    pos = comma + 1;
    if (token.empty()) throw DomainError("empty pattern in list '" + std::string(text) + "'");
    const std::size_t sep = token.find_first_of(":-");
    try {
      std::size_t used = 0;
      if (sep != std::string::npos) {
        const int k1 = std::stoi(token.substr(0, sep), &used);
        if (used != sep) throw std::invalid_argument(token);
        const std::string rest = token.substr(sep + 1);
        const int k2 = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(token);
        out.emplace_back(k1, k2);
      } else if (token.size() == 2 && std::isdigit(static_cast<unsigned char>(token[0])) &&
                 std::isdigit(static_cast<unsigned char>(token[1]))) {
        out.emplace_back(token[0] - '0', token[1] - '0');
      } else {
        throw std::invalid_argument(token);
      }
    } catch (const std::logic_error&) {
      throw DomainError("cannot parse pattern '" + token + "' (use 22 or 10:11)");
    }
    if (out.back().first < 0 || out.back().second < 0) throw DomainError("pattern photon numbers must be >= 0");
  }
  return out;
}

std::vector<double> beta_grid(double lo, double hi, int steps) {
  if (steps < 1) throw DomainError("beta grid needs at least one step");
  if (!(lo > 0.0) || !(hi >= lo)) throw DomainError("beta grid needs 0 < beta_min <= beta_max");
  if (steps > 1 && hi == lo) throw DomainError("beta grid with several steps needs beta_max > beta_min");
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) out[static_cast<std::size_t>(i)] = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
  return out;
}

const char* to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

std::string config_to_json(const RunConfig& c) {
  json j;
  j["cutoff"] = c.cutoff.fixed ? json(*c.cutoff.fixed) : json("auto");
  j["truncation_tolerance"] = c.cutoff.tolerance;
  j["oracle_tolerance"] = c.oracle_tolerance;
  j["search_box"] = {{"B_min", c.box.B_min}, {"B_max", c.box.B_max},
                     {"S_min_dB", c.box.S_min_dB}, {"S_max_dB", c.box.S_max_dB}};
  j["optimizer"] = {{"grid_B", c.grid_B}, {"grid_S", c.grid_S},
                    {"simplex_tolerance", c.simplex_tolerance}, {"max_evaluations", c.max_evaluations}};
  j["baseline"] = {{"y2_min", c.baseline.y2_min}, {"y2_max", c.baseline.y2_max},
                   {"scan_points", c.baseline.scan_points}, {"y2_tolerance", c.baseline.y2_tolerance}};
  j["baseline_S_dB"] = c.baseline_S_dB;
  j["format"] = to_string(c.format);
  j["output"] = c.output;
  j["threads"] = c.threads;
  return j.dump();
}

namespace {

template <class T>
void take(const json& obj, const char* key, T& out) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("config key '") + key + "': " + e.what());
  }
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known, const std::string& where) {
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || item.key() == k;
    if (!ok) throw DomainError("unknown config key '" + where + item.key() + "'");
  }
}

}  // namespace

RunConfig config_from_json(std::string_view text, RunConfig c) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("config must be a JSON object");
  reject_unknown(j,
                 {"cutoff", "truncation_tolerance", "oracle_tolerance", "search_box", "optimizer", "baseline",
                  "baseline_S_dB", "format", "output", "threads"},
                 "");

  if (j.contains("cutoff")) {
    const json& v = j["cutoff"];
    if (v.is_string() && v.get<std::string>() == "auto") c.cutoff.fixed.reset();
    else if (v.is_number_integer()) c.cutoff.fixed = v.get<int>();
    else throw DomainError("config key 'cutoff' must be \"auto\" or an integer");
  }
  take(j, "truncation_tolerance", c.cutoff.tolerance);
  take(j, "oracle_tolerance", c.oracle_tolerance);
  if (j.contains("search_box")) {
    const json& b = j["search_box"];
    reject_unknown(b, {"B_min", "B_max", "S_min_dB", "S_max_dB"}, "search_box.");
    take(b, "B_min", c.box.B_min);
    take(b, "B_max", c.box.B_max);
    take(b, "S_min_dB", c.box.S_min_dB);
    take(b, "S_max_dB", c.box.S_max_dB);
  }
  if (j.contains("optimizer")) {
    const json& o = j["optimizer"];
    reject_unknown(o, {"grid_B", "grid_S", "simplex_tolerance", "max_evaluations"}, "optimizer.");
    take(o, "grid_B", c.grid_B);
    take(o, "grid_S", c.grid_S);
    take(o, "simplex_tolerance", c.simplex_tolerance);
    take(o, "max_evaluations", c.max_evaluations);
  }
  if (j.contains("baseline")) {
    const json& b = j["baseline"];
    reject_unknown(b, {"y2_min", "y2_max", "scan_points", "y2_tolerance"}, "baseline.");
    take(b, "y2_min", c.baseline.y2_min);
    take(b, "y2_max", c.baseline.y2_max);
    take(b, "scan_points", c.baseline.scan_points);
    take(b, "y2_tolerance", c.baseline.y2_tolerance);
  }
  take(j, "baseline_S_dB", c.baseline_S_dB);
  if (j.contains("format")) {
    std::string f;
    take(j, "format", f);
    c.format = parse_format(f);
  }
  take(j, "output", c.output);
  take(j, "threads", c.threads);
  if (c.threads < 1) throw DomainError("threads must be >= 1");
  return c;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return config_from_json(buf.str(), std::move(base));
}

}  // namespace scsgen
