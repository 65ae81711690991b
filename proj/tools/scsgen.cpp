// scsgen: heralded SCS generation from squeezed vacuum and two ancilla photons.
//
//   scsgen herald --k1 2 --k2 2 --squeeze-db 6 --B 0.5 --check
//   scsgen sweep --parity even --beta-min 0.5 --beta-max 3 --steps 26
//   scsgen compare --patterns 44,66 --baseline-sdb 9,20
//   scsgen distribution --squeeze-db 6 --B 1 --kmax 8
//   scsgen validate
//
// Exit codes: 0 success, 1 validation failure, 2 usage or domain error, 3 numerical
// truncation or non-convergence.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "scsgen/errors.hpp"
#include "scsgen/herald.hpp"
#include "scsgen/oracle.hpp"
#include "scsgen/optimizer.hpp"
#include "scsgen/parallel.hpp"
#include "scsgen/report.hpp"
#include "scsgen/run_config.hpp"
#include "scsgen/validation.hpp"

namespace {

using namespace scsgen;

constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct CommonFlags {
  std::string config_path;
  std::string format;
  std::string output;
  std::string cutoff;
  int threads = 0;
};

struct SqueezeFlags {
  std::optional<double> s_db;
  std::optional<double> y;
  std::optional<double> s;

  void attach(CLI::App* cmd) {
    cmd->add_option("--squeeze-db", s_db, "initial squeezing in dB");
    cmd->add_option("--y", y, "squeezing parameter tanh(s)/2");
    cmd->add_option("--s", s, "squeezing amplitude");
  }

  SqueezeParams resolve() const {
    const int given = s_db.has_value() + y.has_value() + s.has_value();
    if (given != 1) throw DomainError("give exactly one of --squeeze-db, --y, --s");
    if (s_db) return squeeze_from(SqueezeAnchor::decibels, *s_db);
    if (y) return squeeze_from(SqueezeAnchor::parameter, *y);
    return squeeze_from(SqueezeAnchor::amplitude, *s);
  }
};

RunConfig effective_config(const CommonFlags& f) {
  RunConfig c;
  if (!f.config_path.empty()) c = load_config_file(f.config_path, c);
  if (!f.format.empty()) c.format = parse_format(f.format);
  if (!f.output.empty()) c.output = f.output;
  if (f.threads > 0) c.threads = f.threads;
  if (!f.cutoff.empty()) {
    if (f.cutoff == "auto") {
      c.cutoff.fixed.reset();
    } else {
      try {
        std::size_t used = 0;
        c.cutoff.fixed = std::stoi(f.cutoff, &used);
        if (used != f.cutoff.size()) throw std::invalid_argument(f.cutoff);
      } catch (const std::logic_error&) {
        throw DomainError("--cutoff must be 'auto' or an integer");
      }
    }
  }
  return c;
}

void emit(const RunConfig& config, ReportHeader header, const Table& table) {
  header.config_json = config_to_json(config);
  header.timestamp = current_timestamp();
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!config.output.empty()) {
    file.open(config.output);
    if (!file) throw DomainError("cannot write " + config.output);
    os = &file;
  }
  if (config.format == OutputFormat::csv) write_csv(*os, header, table);
  else write_json(*os, header, table);
}

int cmd_herald(const CommonFlags& common, int k1, int k2, const SqueezeFlags& sq_flags, double B,
               const std::string& ancillas, bool check) {
  const RunConfig config = effective_config(common);
  if (ancillas != "11" && ancillas != "00") throw DomainError("--ancillas must be 11 or 00");
  if (k1 < 0 || k2 < 0) throw DomainError("--k1 and --k2 must be >= 0");
  const SqueezeParams sq = sq_flags.resolve();
  const BeamSplitter bs = BeamSplitter::from_ratio(B);
  const CascadeParams cascade = CascadeParams::make(sq, bs);
  const int anc = ancillas == "11" ? 1 : 0;

  ReportHeader header;
  header.command = "herald";
  header.summary = {{"k1", static_cast<long long>(k1)}, {"k2", static_cast<long long>(k2)},
                    {"ancillas", ancillas},          {"s", sq.s},
                    {"y", sq.y},                     {"S_dB", sq.s_db},
                    {"B", B},                        {"y1", cascade.y1},
                    {"y2", cascade.y2}};

  FockVector state;
  double probability = 0.0;
  bool validation_failed = false;
  const bool closed_form = anc == 1 && k1 >= 1 && k2 >= 1;
  if (closed_form) {
    const HeraldPattern p(k1, k2);
    state = conditional_state(p, cascade.y2, B, config.cutoff);
    probability = herald_probability(p, cascade, config.cutoff);
    header.summary.emplace_back("route", std::string("closed_form"));
    if (check) {
      const HeraldOutcome o = cascade_herald(smsv_state(sq, config.cutoff), 1, 1, bs, k1, k2);
      double residual = 0.0;
      for (int n = 0; n <= std::max(state.cutoff(), o.state.cutoff()); ++n) {
        residual = std::max(residual, std::abs(state[n] - o.state[n]));
      }
      const double p_residual = o.probability > 0.0 ? std::abs(probability - o.probability) / o.probability : 1.0;
      header.summary.emplace_back("oracle_probability", o.probability);
      header.summary.emplace_back("state_residual", residual);
      header.summary.emplace_back("probability_residual", p_residual);
      validation_failed = !(residual <= config.oracle_tolerance && p_residual <= config.oracle_tolerance);
      header.summary.emplace_back("check", std::string(validation_failed ? "FAIL" : "PASS"));
    }
  } else {
    const HeraldOutcome o = cascade_herald(smsv_state(sq, config.cutoff), anc, anc, bs, k1, k2);
    state = o.state;
    probability = o.probability;
    header.summary.emplace_back(
        "route", std::string(anc == 0 ? "oracle (vacuum ancillas)" : "oracle (closed form needs k1, k2 >= 1)"));
    if (!o.feasible) header.summary.emplace_back("note", std::string("outcome unreachable: zero probability"));
  }
  header.summary.emplace_back("probability", probability);
  header.summary.emplace_back("parity", std::string(state.empty() ? "none" : to_string(state.parity())));
  header.summary.emplace_back("cutoff", static_cast<long long>(state.cutoff()));

  Table t;
  t.columns = {"n", "amplitude"};
  for (int n = 0; n <= std::min(state.cutoff(), 19); ++n) t.rows.push_back({static_cast<long long>(n), state[n]});
  emit(config, header, t);
  return validation_failed ? kExitValidation : 0;
}

std::vector<std::pair<int, int>> patterns_for(const std::string& parity, const std::string& list) {
  std::vector<std::pair<int, int>> patterns;
  if (!list.empty()) patterns = parse_patterns(list);
  else if (parity == "odd") patterns = {{2, 3}, {4, 5}, {6, 7}};
  else if (parity == "even" || parity.empty()) patterns = {{2, 2}, {4, 4}, {6, 6}};
  if (!parity.empty() && parity != "even" && parity != "odd") throw DomainError("--parity must be even or odd");
  for (const auto& [k1, k2] : patterns) {
    if (k1 < 1 || k2 < 1) throw DomainError("sweep patterns need k1, k2 >= 1");
    if (!parity.empty() && ((k1 + k2) % 2 == 0) != (parity == "even")) {
      throw DomainError("pattern " + std::to_string(k1) + ":" + std::to_string(k2) + " does not have " + parity +
                        " parity");
    }
  }
  return patterns;
}

int cmd_sweep(const CommonFlags& common, const std::string& parity, const std::string& list, double beta_min,
              double beta_max, int steps) {
  const RunConfig config = effective_config(common);
  const auto patterns = patterns_for(parity, list);
  const std::vector<double> betas = beta_grid(beta_min, beta_max, steps);
  OptimizerSettings settings = config.optimizer_settings();
  settings.threads = 1;

  std::vector<std::vector<OptimizationResult>> per_pattern(patterns.size());
  parallel_for(patterns.size(), config.threads, [&](std::size_t i) {
    per_pattern[i] = sweep_beta(patterns[i].first, patterns[i].second, betas, config.box, settings);
  });
  std::vector<OptimizationResult> rows;
  for (auto& v : per_pattern) rows.insert(rows.end(), v.begin(), v.end());

  ReportHeader header;
  header.command = "sweep";
  emit(config, header, sweep_table(rows));
  const bool all_failed =
      !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const auto& r) { return !r.failure.empty(); });
  return all_failed ? kExitNumerical : 0;
}

int cmd_compare(const CommonFlags& common, const std::string& list, const std::vector<double>& baseline_flag,
                double beta_min, double beta_max, int steps) {
  RunConfig config = effective_config(common);
  if (!baseline_flag.empty()) config.baseline_S_dB = baseline_flag;
  for (double s : config.baseline_S_dB) {
    if (!(s > 0.0)) throw DomainError("baseline squeezing must be > 0 dB");
  }
  const auto patterns = patterns_for("", list.empty() ? "22,44,66,23,45,67" : list);
  const std::vector<double> betas = beta_grid(beta_min, beta_max, steps);
  OptimizerSettings settings = config.optimizer_settings();
  settings.threads = 1;
  const auto rows = gain_curves(patterns, betas, config.baseline_S_dB, config.box, settings,
                                config.baseline_settings(), config.threads);
  ReportHeader header;
  header.command = "compare";
  emit(config, header, gain_table(rows));
  return 0;
}

int cmd_distribution(const CommonFlags& common, const SqueezeFlags& sq_flags, double B, const std::string& ancillas,
                     int kmax) {
  const RunConfig config = effective_config(common);
  if (ancillas != "11" && ancillas != "00") throw DomainError("--ancillas must be 11 or 00");
  const SqueezeParams sq = sq_flags.resolve();
  const int anc = ancillas == "11" ? 1 : 0;
  const auto rows =
      herald_distribution(smsv_state(sq, config.cutoff), anc, anc, BeamSplitter::from_ratio(B), kmax, config.threads);
  double total = 0.0;
  for (const auto& r : rows) total += r.probability;
  ReportHeader header;
  header.command = "distribution";
  header.summary = {{"S_dB", sq.s_db}, {"y", sq.y}, {"B", B}, {"ancillas", ancillas}, {"total_probability", total}};
  emit(config, header, distribution_table(rows));
  return 0;
}

int cmd_validate(const CommonFlags& common) {
  const RunConfig config = effective_config(common);
  const ValidationReport report = run_validation({}, config.oracle_tolerance);
  for (const SuiteResult& s : report.suites) {
    std::cout << (s.passed ? "PASS " : "FAIL ") << s.name << "  cases=" << s.cases
              << "  max_residual=" << format_number(s.max_residual) << "  tolerance=" << format_number(s.tolerance)
              << '\n';
  }
  for (const SuiteResult& s : report.suites) {
    if (!s.passed) {
      std::cout << "first failure in " << s.name << ": " << s.first_failure << '\n';
      return kExitValidation;
    }
  }
  std::cout << "all suites passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heralded even/odd SCS generation from squeezed vacuum with two ancilla photons"};
  app.set_version_flag("--version", std::string("scsgen ") + SCSGEN_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  CommonFlags common;
  app.add_option("--config", common.config_path, "JSON run configuration; flags override its values");
  app.add_option("--format", common.format, "csv or json");
  app.add_option("--output,-o", common.output, "output file (default stdout)");
  app.add_option("--threads", common.threads, "worker threads");
  app.add_option("--cutoff", common.cutoff, "Fock cutoff: auto or an integer");

  int k1 = 0, k2 = 0;
  double B = 1.0;
  std::string ancillas = "11";
  bool check = false;
  SqueezeFlags herald_sq;
  auto* herald = app.add_subcommand("herald", "conditional state and probability of one detector outcome");
  herald->add_option("--k1", k1, "photons detected in mode 2")->required();
  herald->add_option("--k2", k2, "photons detected in mode 3")->required();
  herald->add_option("--B", B, "beam-splitter parameter R/T")->required();
  herald->add_option("--ancillas", ancillas, "11 (one photon per ancilla) or 00 (vacuum)");
  herald->add_flag("--check", check, "compare the closed form with the interferometer oracle");
  herald_sq.attach(herald);

  std::string parity, patterns;
  double beta_min = 0.5, beta_max = 3.0;
  int steps = 26;
  auto* sweep = app.add_subcommand("sweep", "optimized fidelity, B, S and probability versus beta");
  sweep->add_option("--parity", parity, "even or odd");
  sweep->add_option("--patterns", patterns, "comma-separated outcomes, e.g. 22,44,66");
  sweep->add_option("--beta-min", beta_min);
  sweep->add_option("--beta-max", beta_max);
  sweep->add_option("--steps", steps);

  std::vector<double> baseline_sdb;
  auto* compare = app.add_subcommand("compare", "fidelity and probability gains over vacuum ancillas");
  compare->add_option("--patterns", patterns, "comma-separated outcomes");
  compare->add_option("--baseline-sdb", baseline_sdb, "baseline initial squeezing values in dB")->delimiter(',');
  compare->add_option("--beta-min", beta_min);
  compare->add_option("--beta-max", beta_max);
  compare->add_option("--steps", steps);

  int kmax = 10;
  SqueezeFlags dist_sq;
  auto* distribution = app.add_subcommand("distribution", "full outcome probability table from the oracle");
  distribution->add_option("--B", B, "beam-splitter parameter R/T")->required();
  distribution->add_option("--ancillas", ancillas, "11 or 00");
  distribution->add_option("--kmax", kmax, "largest photon number per detector");
  dist_sq.attach(distribution);

  auto* validate = app.add_subcommand("validate", "oracle-equivalence and two-route normalization suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (herald->parsed()) return cmd_herald(common, k1, k2, herald_sq, B, ancillas, check);
    if (sweep->parsed()) return cmd_sweep(common, parity, patterns, beta_min, beta_max, steps);
    if (compare->parsed()) return cmd_compare(common, patterns, baseline_sdb, beta_min, beta_max, steps);
    if (distribution->parsed()) return cmd_distribution(common, dist_sq, B, ancillas, kmax);
    if (validate->parsed()) return cmd_validate(common);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TruncationError& e) {
    std::cerr << "truncation error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
