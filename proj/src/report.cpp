#include "scsgen/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>

#include "json.hpp"

namespace scsgen {

std::string current_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return format_number(v);
        else if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return v;
      },
      c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

nlohmann::json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return format_number(v);
          return std::stod(format_number(v));
        } else {
          return v;
        }
      },
      c);
}

long long as_int(int v) { return static_cast<long long>(v); }

}  // namespace

void write_csv(std::ostream& os, const ReportHeader& h, const Table& t) {
  os << "# generator: scsgen " << h.version << '\n';
  os << "# command: " << h.command << '\n';
  os << "# timestamp: " << h.timestamp << '\n';
  os << "# config: " << h.config_json << '\n';
  for (const auto& [key, value] : h.summary) os << "# " << key << ": " << cell_text(value) << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(cell_text(row[i]));
    os << '\n';
  }
}

void write_json(std::ostream& os, const ReportHeader& h, const Table& t) {
  nlohmann::ordered_json doc;
  doc["generator"] = "scsgen";
  doc["version"] = h.version;
  doc["command"] = h.command;
  doc["timestamp"] = h.timestamp;
  doc["config"] = h.config_json.empty() ? nlohmann::ordered_json::object() : nlohmann::ordered_json::parse(h.config_json);
  if (!h.summary.empty()) {
    nlohmann::ordered_json summary;
    for (const auto& [key, value] : h.summary) summary[key] = cell_json(value);
    doc["summary"] = std::move(summary);
  }
  doc["columns"] = t.columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
    doc["rows"].push_back(std::move(obj));
  }
  os << doc.dump(2) << '\n';
}

Table sweep_table(const std::vector<OptimizationResult>& rows) {
  Table t;
  t.columns = {"beta", "k1", "k2", "B_opt", "S_opt_dB", "fid_max", "probability", "converged", "evaluations", "failure"};
  for (const auto& r : rows) {
    t.rows.push_back({r.beta, as_int(r.k1), as_int(r.k2), r.B_opt, r.S_opt_dB, r.fid_max, r.probability, r.converged,
                      as_int(r.evaluations), r.failure});
  }
  return t;
}

Table gain_table(const std::vector<GainMetrics>& rows) {
  Table t;
  t.columns = {"beta", "k1", "k2", "fid11", "fid00", "g_dB", "p11", "p00", "j_dB", "baseline_S_dB", "feasible", "flag"};
  for (const auto& r : rows) {
    std::string flag;
    if (!r.feasible) flag = "infeasible_baseline";
    else if (r.infinite_gain) flag = "baseline_probability_zero";
    t.rows.push_back({r.beta, as_int(r.k1), as_int(r.k2), r.fid11, r.fid00, r.g_dB, r.p11, r.p00, r.j_dB,
                      r.baseline_S_dB, r.feasible, flag});
  }
  return t;
}

Table distribution_table(const std::vector<HeraldOutcome>& rows) {
  Table t;
  t.columns = {"k1", "k2", "probability", "parity", "feasible"};
  for (const auto& r : rows) {
    t.rows.push_back({as_int(r.k1), as_int(r.k2), r.probability,
                      std::string(r.feasible ? to_string(r.state.parity()) : "none"), r.feasible});
  }
  return t;
}

}  // namespace scsgen
