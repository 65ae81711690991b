// Acceptance checks for scsgen. Prints one PASS/FAIL line per criterion; `--only N` runs
// a single criterion. Exit status is nonzero when any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "literal_forms.hpp"
#include "scsgen/herald.hpp"
#include "scsgen/oracle.hpp"
#include "scsgen/optimizer.hpp"
#include "scsgen/run_config.hpp"

using namespace scsgen;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<double>& sweep_grid() {
  static const std::vector<double> g = beta_grid(0.5, 3.0, 26);
  return g;
}

// Even-pattern sweeps, computed once and shared between criteria.
const std::vector<OptimizationResult>& even_sweep(int k) {
  static std::map<int, std::vector<OptimizationResult>> cache;
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, sweep_beta(k, k, sweep_grid())).first;
  return it->second;
}

const std::vector<GainMetrics>& gains() {
  static const std::vector<GainMetrics> rows = [] {
    const std::vector<std::pair<int, int>> patterns{{2, 2}, {4, 4}, {6, 6}, {2, 3}, {4, 5}, {6, 7}};
    const std::vector<double> baselines{20.0, 9.0};
    return gain_curves(patterns, sweep_grid(), baselines, {}, {}, {}, 6);
  }();
  return rows;
}

Verdict oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  double state_res = 0.0, prob_res = 0.0;
  for (double y : {0.1, 0.2, 0.3}) {
    const SqueezeParams sq = squeeze_from(SqueezeAnchor::parameter, y);
    const FockVector input = smsv_state(sq);
    for (double B : {0.3, 1.0, 2.5}) {
      const BeamSplitter bs = BeamSplitter::from_ratio(B);
      const CascadeParams c = CascadeParams::make(sq, bs);
      for (int k1 = 1; k1 <= 4; ++k1) {
        for (int k2 = 1; k2 <= 4; ++k2) {
          const HeraldPattern p(k1, k2);
          const HeraldOutcome o = cascade_herald(input, 1, 1, bs, k1, k2);
          const FockVector s = conditional_state(p, c.y2, B);
          for (int n = 0; n <= std::max(s.cutoff(), o.state.cutoff()); ++n) {
            state_res = std::max(state_res, std::abs(s[n] - o.state[n]));
          }
          prob_res = std::max(prob_res, std::abs(herald_probability(p, c) - o.probability) / o.probability);
        }
      }
    }
  }
  const double elapsed = seconds_since(t0);
  return {state_res < 1e-9 && prob_res < 1e-9 && elapsed < 30.0,
          "max state residual " + fmt("%.3g", state_res) + ", max relative probability residual " +
              fmt("%.3g", prob_res) + ", " + fmt("%.2f", elapsed) + " s"};
}

Verdict two_route_normalization() {
  double worst = 0.0;
  for (int k1 = 1; k1 <= 6; ++k1) {
    for (int k2 = 1; k2 <= 6; ++k2) {
      for (double y2 : {0.05, 0.15, 0.3}) {
        for (double B : {0.2, 1.0, 3.0}) {
          const HeraldPattern p(k1, k2);
          const double d = normalization_G_direct(p, y2, B);
          worst = std::max(worst, std::abs(normalization_G_closed(p, y2, B) - d) / d);
        }
      }
    }
  }
  return {worst < 1e-9, "max relative difference " + fmt("%.3g", worst)};
}

Verdict transcription() {
  double worst = 0.0;
  int cases = 0;
  for (int k1 = 1; k1 <= 7; ++k1) {
    for (int k2 = 1; k2 <= 7; ++k2) {
      const HeraldPattern p(k1, k2);
      for (double y2 : {0.03, 0.2, 0.41}) {
        for (double B : {0.15, 1.0, 2.2}) {
          const double G = normalization_G_direct(p, y2, B);
          for (int j = 0; j <= 20; ++j) {
            const double lit = literal::normalized_amplitude(k1, k2, y2, B, j, G);
            const double uni = conditional_amplitude(p, y2, B, j) / std::sqrt(G);
            worst = std::max(worst, std::abs(lit - uni));
            ++cases;
          }
        }
      }
    }
  }
  return {worst < 1e-12, std::to_string(cases) + " normalized coefficients, max difference " + fmt("%.3g", worst)};
}

Verdict completeness() {
  const FockVector input = smsv_state(squeeze_from(SqueezeAnchor::parameter, 0.2));
  double total = 0.0;
  for (const auto& o : herald_distribution(input, 1, 1, BeamSplitter::from_ratio(1.0), input.cutoff() + 2)) {
    total += o.probability;
  }
  return {std::abs(total - 1.0) < 1e-8, "total probability 1 - " + fmt("%.3g", 1.0 - total)};
}

Verdict fidelity_threshold() {
  const auto t0 = std::chrono::steady_clock::now();
  const OptimizationResult r = optimize_fidelity(6, 6, 2.6);
  const double elapsed = seconds_since(t0);
  return {r.fid_max >= 0.99 && elapsed < 60.0,
          "fid_max " + fmt("%.6f", r.fid_max) + " at B " + fmt("%.4f", r.B_opt) + ", S " + fmt("%.3f", r.S_opt_dB) +
              " dB, " + fmt("%.2f", elapsed) + " s"};
}

Verdict probability_threshold() {
  double best = 0.0, at = 0.0;
  for (const auto& r : even_sweep(2)) {
    if (r.probability > best) {
      best = r.probability;
      at = r.beta;
    }
  }
  return {best >= 0.04, "max P22 " + fmt("%.5f", best) + " at beta " + fmt("%.2f", at)};
}

Verdict optimizing_parameters() {
  bool ok = true;
  std::string out;
  for (int k : {2, 4, 6}) {
    double lo = 1e9, hi = -1e9, lo_beta = 0.0;
    for (const auto& r : even_sweep(k)) {
      if (r.beta < 1.0 - 1e-12) continue;
      if (r.B_opt < lo) {
        lo = r.B_opt;
        lo_beta = r.beta;
      }
      hi = std::max(hi, r.B_opt);
    }
    const bool inside = lo > 0.05 && hi < 0.9;
    ok = ok && inside;
    out += "B_opt(" + std::to_string(k) + std::to_string(k) + ") in [" + fmt("%.4f", lo) + ", " + fmt("%.4f", hi) +
           "]" + (inside ? "" : " (min at beta " + fmt("%.2f", lo_beta) + ")") + "; ";
  }
  const auto at2 = [](int k) {
    for (const auto& r : even_sweep(k)) {
      if (std::abs(r.beta - 2.0) < 1e-9) return r.S_opt_dB;
    }
    return std::nan("");
  };
  const double s2 = at2(2), s4 = at2(4), s6 = at2(6);
  const bool ordered = s2 > s4 && s4 > s6;
  out += "S_opt at beta 2: " + fmt("%.3f", s2) + " > " + fmt("%.3f", s4) + " > " + fmt("%.3f", s6) + " dB";
  return {ok && ordered, out};
}

Verdict baseline_exception() {
  bool ok = true;
  double g22_max = -1e9;
  std::map<std::string, double> g_min;
  for (const auto& g : gains()) {
    if (g.beta < 1.5 - 1e-12) continue;
    const std::string key = std::to_string(g.k1) + std::to_string(g.k2);
    if (g.k1 == 2 && g.k2 == 2) {
      g22_max = std::max(g22_max, g.g_dB);
      ok = ok && g.fid00 > g.fid11;
    } else if (!(g.k1 == 2 && g.k2 == 3)) {
      g_min[key] = g_min.count(key) ? std::min(g_min[key], g.g_dB) : g.g_dB;
      ok = ok && g.g_dB > 0.0;
    }
  }
  std::string out = "max g22 " + fmt("%.4g", g22_max) + " dB; min g";
  for (const auto& [k, v] : g_min) out += " " + k + ": " + fmt("%.4g", v);
  return {ok, out + " dB (beta in [1.5, 3])"};
}

Verdict probability_gain_signs() {
  bool ok = true;
  std::map<std::string, double> worst;
  std::map<std::string, double> worst_beta;
  for (const auto& g : gains()) {
    const bool relevant = g.baseline_S_dB == 9.0 || g.beta > 1.0 + 1e-12;
    if (!relevant) continue;
    const bool positive = g.feasible && g.j_dB > 0.0;
    ok = ok && positive;
    const std::string key = std::to_string(g.k1) + std::to_string(g.k2) + "@" + fmt("%.0f", g.baseline_S_dB);
    const double v = g.feasible ? g.j_dB : -INFINITY;
    if (!worst.count(key) || v < worst[key]) {
      worst[key] = v;
      worst_beta[key] = g.beta;
    }
  }
  std::string out = "min j_dB";
  for (const auto& [k, v] : worst) out += " " + k + ": " + fmt("%.3g", v) + " (beta " + fmt("%.2f", worst_beta[k]) + ")";
  return {ok, out};
}

Verdict determinism() {
  const std::vector<int> degrees{1, 4, 8};
  bool same = true;

  const FockVector input = smsv_state(squeeze_from(SqueezeAnchor::parameter, 0.3));
  std::vector<std::vector<HeraldOutcome>> dists;
  for (int t : degrees) dists.push_back(herald_distribution(input, 1, 1, BeamSplitter::from_ratio(0.7), 8, t));
  for (const auto& d : dists) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      same = same && d[i].probability == dists[0][i].probability && d[i].state.cutoff() == dists[0][i].state.cutoff();
      for (int n = 0; n <= d[i].state.cutoff(); ++n) same = same && d[i].state[n] == dists[0][i].state[n];
    }
  }

  std::vector<OptimizationResult> opts;
  for (int t : degrees) {
    OptimizerSettings s;
    s.threads = t;
    opts.push_back(optimize_fidelity(6, 7, 2.2, {}, s));
  }
  for (const auto& r : opts) {
    same = same && r.fid_max == opts[0].fid_max && r.B_opt == opts[0].B_opt && r.S_opt_dB == opts[0].S_opt_dB &&
           r.probability == opts[0].probability;
  }

  const std::vector<std::pair<int, int>> patterns{{2, 2}, {4, 5}, {6, 6}};
  const std::vector<double> betas{0.7, 1.9, 2.8};
  const std::vector<double> baselines{20.0, 9.0};
  std::vector<std::vector<GainMetrics>> curves;
  for (int t : degrees) curves.push_back(gain_curves(patterns, betas, baselines, {}, {}, {}, t));
  const auto eq = [](double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); };
  for (const auto& c : curves) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const GainMetrics &a = c[i], &b = curves[0][i];
      same = same && a.k1 == b.k1 && a.k2 == b.k2 && a.beta == b.beta && eq(a.fid11, b.fid11) &&
             eq(a.fid00, b.fid00) && eq(a.p11, b.p11) && eq(a.p00, b.p00) && eq(a.g_dB, b.g_dB) && eq(a.j_dB, b.j_dB);
    }
  }
  return {same, same ? "bitwise identical outcome tables, optima and gain curves for 1, 4, 8 threads"
                     : "results differ between thread counts"};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::optional<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--only N]\n", argv[0]);
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "oracle equivalence", oracle_equivalence},
      {2, "two-route normalization", two_route_normalization},
      {3, "per-case amplitude transcription", transcription},
      {4, "measurement completeness", completeness},
      {5, "fidelity threshold (6,6) at beta 2.6", fidelity_threshold},
      {6, "probability threshold P22 >= 0.04", probability_threshold},
      {7, "optimizing parameters B_opt and S_opt", optimizing_parameters},
      {8, "vacuum-ancilla baseline exception", baseline_exception},
      {9, "probability gain sign structure", probability_gain_signs},
      {10, "determinism across thread counts", determinism},
  };

  bool all = true;
  bool matched = false;
  for (const Criterion& c : criteria) {
    if (only && *only != c.id) continue;
    matched = true;
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    all = all && v.pass;
    std::printf("%s %2d %s: %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str());
    std::fflush(stdout);
  }
  if (!matched) {
    std::fprintf(stderr, "no criterion %d\n", only.value_or(0));
    return 2;
  }
  return all ? 0 : 1;
}
