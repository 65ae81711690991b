#include "scsgen/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "scsgen/errors.hpp"
#include "scsgen/nelder_mead.hpp"
#include "scsgen/oracle.hpp"
#include "scsgen/parallel.hpp"

namespace scsgen {

namespace {

void check_box(const SearchBox& box) {
  if (!(box.B_min > 0.0 && box.B_min < box.B_max)) throw DomainError("search box needs 0 < B_min < B_max");
  if (!(box.S_min_dB >= 0.0 && box.S_min_dB < box.S_max_dB)) throw DomainError("search box needs 0 <= S_min < S_max");
}

double linspace_at(double lo, double hi, int count, int i) {
  return count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

}  // namespace

ScsTarget target_for(const HeraldPattern& p, double beta) {
  return ScsTarget(beta, p.parity() == Parity::even ? ScsSign::plus : ScsSign::minus);
}

double fidelity_11(const HeraldPattern& p, double B, double S_dB, const FockVector& target,
                   const CutoffPolicy& cutoff) {
  const SqueezeParams sq = squeeze_from(SqueezeAnchor::decibels, S_dB);
  const double y2 = sq.y / ((1.0 + B) * (1.0 + B));
  return fidelity(conditional_state(p, y2, B, cutoff), target);
}

double probability_11(const HeraldPattern& p, double B, double S_dB, const CutoffPolicy& cutoff) {
  const CascadeParams c =
      CascadeParams::make(squeeze_from(SqueezeAnchor::decibels, S_dB), BeamSplitter::from_ratio(B));
  return herald_probability(p, c, cutoff);
}

OptimizationResult optimize_fidelity(int k1, int k2, double beta, const SearchBox& box,
                                     const OptimizerSettings& settings,
                                     std::optional<std::pair<double, double>> warm_start) {
  check_box(box);
  if (settings.grid_B < 2 || settings.grid_S < 2) throw DomainError("coarse grid needs at least 2 points per axis");
  const HeraldPattern pattern(k1, k2);
  const FockVector target = scs_state(target_for(pattern, beta), settings.cutoff);

  const auto inside = [&](double B, double S) {
    return B >= box.B_min && B <= box.B_max && S >= box.S_min_dB && S <= box.S_max_dB;
  };
  const auto fid = [&](double B, double S) { return fidelity_11(pattern, B, S, target, settings.cutoff); };

  const int nB = settings.grid_B;
  const int nS = settings.grid_S;
  std::vector<double> grid(static_cast<std::size_t>(nB) * static_cast<std::size_t>(nS));
  parallel_for(grid.size(), settings.threads, [&](std::size_t idx) {
    const int i = static_cast<int>(idx) / nS;
    const int j = static_cast<int>(idx) % nS;
    grid[idx] = fid(linspace_at(box.B_min, box.B_max, nB, i), linspace_at(box.S_min_dB, box.S_max_dB, nS, j));
  });
  const auto best_cell = static_cast<int>(std::max_element(grid.begin(), grid.end()) - grid.begin());
  const double grid_B = linspace_at(box.B_min, box.B_max, nB, best_cell / nS);
  const double grid_S = linspace_at(box.S_min_dB, box.S_max_dB, nS, best_cell % nS);

  const double dB = (box.B_max - box.B_min) / (nB - 1);
  const double dS = (box.S_max_dB - box.S_min_dB) / (nS - 1);
  const auto refine = [&](double B0, double S0) {
    const std::array<double, 2> step{B0 + dB <= box.B_max ? dB : -dB, S0 + dS <= box.S_max_dB ? dS : -dS};
    return nelder_mead_minimize<2>(
        [&](const std::array<double, 2>& x) {
          if (!inside(x[0], x[1])) return std::numeric_limits<double>::infinity();
          return -fid(x[0], x[1]);
        },
        {B0, S0}, step, {settings.simplex_tolerance, settings.simplex_tolerance}, settings.max_evaluations);
  };

  SimplexResult<2> best = refine(grid_B, grid_S);
  int evaluations = static_cast<int>(grid.size()) + best.evaluations;
  if (warm_start && inside(warm_start->first, warm_start->second) &&
      (warm_start->first != grid_B || warm_start->second != grid_S)) {
    const SimplexResult<2> warm = refine(warm_start->first, warm_start->second);
    evaluations += warm.evaluations;
    if (warm.value < best.value) best = warm;
  }

  OptimizationResult r;
  r.beta = beta;
  r.k1 = k1;
  r.k2 = k2;
  r.B_opt = best.x[0];
  r.S_opt_dB = best.x[1];
  r.fid_max = -best.value;
  r.grid_best = grid[static_cast<std::size_t>(best_cell)];
  r.probability = probability_11(pattern, r.B_opt, r.S_opt_dB, settings.cutoff);
  r.evaluations = evaluations;
  r.converged = best.converged;
  return r;
}

std::vector<OptimizationResult> sweep_beta(int k1, int k2, std::span<const double> betas, const SearchBox& box,
                                           const OptimizerSettings& settings) {
  for (std::size_t i = 1; i < betas.size(); ++i) {
    if (!(betas[i] > betas[i - 1])) throw DomainError("beta grid must be strictly increasing");
  }
  std::vector<OptimizationResult> out;
  out.reserve(betas.size());
  std::optional<std::pair<double, double>> warm;
  for (double beta : betas) {
    try {
      out.push_back(optimize_fidelity(k1, k2, beta, box, settings, warm));
      warm = std::make_pair(out.back().B_opt, out.back().S_opt_dB);
    } catch (const std::exception& e) {
      OptimizationResult failed;
      failed.beta = beta;
      failed.k1 = k1;
      failed.k2 = k2;
      failed.failure = e.what();
      out.push_back(failed);
    }
  }
  return out;
}

double splitter_for_reduction(double y, double y2) {
  if (!(y2 > 0.0) || !(y >= y2)) throw DomainError("need y >= y2 > 0 to solve y = y2 (1 + B)^2");
  return std::sqrt(y / y2) - 1.0;
}

double fidelity_00(int k1, int k2, double y2, const FockVector& target, const CutoffPolicy& cutoff) {
  if (!(y2 > 0.0 && y2 < 0.5)) throw DomainError("reduced squeezing y2 must lie in (0, 0.5)");
  // Any (y, B) with y / (1 + B)^2 = y2 gives the same state; keep y small to keep the cutoff small.
  const double y = std::min(4.0 * y2, 0.5 * (y2 + 0.5));
  const BeamSplitter bs = BeamSplitter::from_ratio(splitter_for_reduction(y, y2));
  const FockVector input = smsv_state(squeeze_from(SqueezeAnchor::parameter, y), cutoff);
  const HeraldOutcome out = cascade_herald(input, 0, 0, bs, k1, k2);
  return out.feasible ? fidelity(out.state, target) : 0.0;
}

double probability_00(int k1, int k2, double y, double B, const CutoffPolicy& cutoff) {
  const FockVector input = smsv_state(squeeze_from(SqueezeAnchor::parameter, y), cutoff);
  return cascade_herald(input, 0, 0, BeamSplitter::from_ratio(B), k1, k2).probability;
}

Y2Optimum optimize_y2_00(int k1, int k2, double beta, const BaselineSettings& settings) {
  if (!(settings.y2_min > 0.0 && settings.y2_min < settings.y2_max && settings.y2_max < 0.5)) {
    throw DomainError("baseline y2 range must satisfy 0 < min < max < 0.5");
  }
  if (settings.scan_points < 3) throw DomainError("baseline scan needs at least 3 points");
  if (k1 < 0 || k2 < 0) throw DomainError("detected photon numbers must be >= 0");
  const ScsTarget t(beta, (k1 + k2) % 2 == 0 ? ScsSign::plus : ScsSign::minus);
  const FockVector target = scs_state(t, settings.cutoff);
  const auto fid = [&](double y2) { return fidelity_00(k1, k2, y2, target, settings.cutoff); };

  Y2Optimum opt;
  const int n = settings.scan_points;
  std::vector<double> scan(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) scan[static_cast<std::size_t>(i)] = fid(linspace_at(settings.y2_min, settings.y2_max, n, i));
  opt.evaluations = n;
  const int best = static_cast<int>(std::max_element(scan.begin(), scan.end()) - scan.begin());
  opt.y2 = linspace_at(settings.y2_min, settings.y2_max, n, best);
  opt.fid00 = scan[static_cast<std::size_t>(best)];

  // Golden section on the bracket around the best scan point.
  constexpr double kInvPhi = 0.6180339887498949;
  double lo = linspace_at(settings.y2_min, settings.y2_max, n, std::max(best - 1, 0));
  double hi = linspace_at(settings.y2_min, settings.y2_max, n, std::min(best + 1, n - 1));
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = fid(x1);
  double f2 = fid(x2);
  opt.evaluations += 2;
  for (int iter = 0; iter < 200 && hi - lo > settings.y2_tolerance; ++iter) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = fid(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = fid(x2);
    }
    ++opt.evaluations;
  }
  opt.converged = hi - lo <= settings.y2_tolerance;
  const double x = f1 >= f2 ? x1 : x2;
  const double f = std::max(f1, f2);
  if (f > opt.fid00) {
    opt.y2 = x;
    opt.fid00 = f;
  }
  return opt;
}

Baseline00Result baseline_at(int k1, int k2, double beta, const Y2Optimum& opt, double baseline_S_dB,
                             const CutoffPolicy& cutoff) {
  Baseline00Result r;
  r.beta = beta;
  r.k1 = k1;
  r.k2 = k2;
  r.y2_opt = opt.y2;
  r.fid00 = opt.fid00;
  r.baseline_S_dB = baseline_S_dB;
  r.evaluations = opt.evaluations;
  r.converged = opt.converged;
  const double y = squeeze_from(SqueezeAnchor::decibels, baseline_S_dB).y;
  if (!(y > opt.y2)) return r;
  r.B = splitter_for_reduction(y, opt.y2);
  r.probability = probability_00(k1, k2, y, r.B, cutoff);
  r.feasible = true;
  return r;
}

Baseline00Result baseline00(int k1, int k2, double beta, double baseline_S_dB, const BaselineSettings& settings) {
  return baseline_at(k1, k2, beta, optimize_y2_00(k1, k2, beta, settings), baseline_S_dB, settings.cutoff);
}

GainMetrics gain_from(const OptimizationResult& with_photons, const Baseline00Result& baseline) {
  GainMetrics g;
  g.beta = with_photons.beta;
  g.k1 = with_photons.k1;
  g.k2 = with_photons.k2;
  g.fid11 = with_photons.fid_max;
  g.fid00 = baseline.fid00;
  g.g_dB = 10.0 * std::log10(g.fid11 / g.fid00);
  g.p11 = with_photons.probability;
  g.p00 = baseline.probability;
  g.baseline_S_dB = baseline.baseline_S_dB;
  g.feasible = baseline.feasible;
  if (!baseline.feasible) {
    g.j_dB = std::numeric_limits<double>::quiet_NaN();
  } else if (g.p00 == 0.0) {
    g.j_dB = std::numeric_limits<double>::infinity();
    g.infinite_gain = true;
  } else {
    g.j_dB = 10.0 * std::log10(g.p11 / g.p00);
  }
  return g;
}

std::vector<GainMetrics> gain_curves(std::span<const std::pair<int, int>> patterns, std::span<const double> betas,
                                     std::span<const double> baseline_S_dB, const SearchBox& box,
                                     const OptimizerSettings& settings, const BaselineSettings& baseline,
                                     int threads) {
  std::vector<std::vector<GainMetrics>> per_pattern(patterns.size());
  parallel_for(patterns.size(), threads, [&](std::size_t i) {
    const auto [k1, k2] = patterns[i];
    const std::vector<OptimizationResult> sweep = sweep_beta(k1, k2, betas, box, settings);
    for (const OptimizationResult& r : sweep) {
      if (!r.failure.empty()) throw ConvergenceError("optimization failed at beta = " + std::to_string(r.beta) + ": " + r.failure);
      const Y2Optimum opt = optimize_y2_00(k1, k2, r.beta, baseline);
      for (double s_db : baseline_S_dB) {
        per_pattern[i].push_back(gain_from(r, baseline_at(k1, k2, r.beta, opt, s_db, baseline.cutoff)));
      }
    }
  });
  std::vector<GainMetrics> rows;
  for (auto& v : per_pattern) rows.insert(rows.end(), v.begin(), v.end());
  return rows;
}

}  // namespace scsgen
