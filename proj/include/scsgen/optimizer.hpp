#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scsgen/herald.hpp"
#include "scsgen/states.hpp"

namespace scsgen {

// Box searched for the optimizing beam-splitter parameter and initial squeezing.
struct SearchBox {
  double B_min = 0.01;
  double B_max = 1.0;
  double S_min_dB = 0.5;
  double S_max_dB = 20.0;
};

struct OptimizerSettings {
  int grid_B = 40;
  int grid_S = 40;
  double simplex_tolerance = 1e-5;  // per-coordinate simplex spread
  int max_evaluations = 500;        // simplex budget
  CutoffPolicy cutoff;
  int threads = 1;                  // coarse-grid workers
};

struct OptimizationResult {
  double beta = 0.0;
  int k1 = 0;
  int k2 = 0;
  double B_opt = 0.0;
  double S_opt_dB = 0.0;
  double fid_max = 0.0;
  double probability = 0.0;
  double grid_best = 0.0;  // best fidelity on the coarse grid
  int evaluations = 0;
  bool converged = false;
  std::string failure;     // set when the point could not be computed
};

// Target parity follows the heralded state's parity.
ScsTarget target_for(const HeraldPattern& p, double beta);

// Fidelity of the two-photon-ancilla conditional state at (B, S) with `target`.
double fidelity_11(const HeraldPattern& p, double B, double S_dB, const FockVector& target,
                   const CutoffPolicy& cutoff = {});

// Probability of the (k1, k2) outcome at (B, S) with both ancillas carrying one photon.
double probability_11(const HeraldPattern& p, double B, double S_dB, const CutoffPolicy& cutoff = {});

// Coarse grid over the box followed by a downhill-simplex refinement of the best cell
// (and of `warm_start` when given). The result is a local optimum that is at least as
// good as every grid point.
OptimizationResult optimize_fidelity(int k1, int k2, double beta, const SearchBox& box = {},
                                     const OptimizerSettings& settings = {},
                                     std::optional<std::pair<double, double>> warm_start = std::nullopt);

// One result per beta, each warm-started from the previous optimum. A failing point is
// recorded in `failure` and the sweep continues.
std::vector<OptimizationResult> sweep_beta(int k1, int k2, std::span<const double> betas,
                                           const SearchBox& box = {}, const OptimizerSettings& settings = {});

struct BaselineSettings {
  double y2_min = 0.001;
  double y2_max = 0.49;
  int scan_points = 50;        // coarse bracket search before golden section
  double y2_tolerance = 1e-9;
  CutoffPolicy cutoff;
};

// Vacuum-ancilla reference: fidelity depends on y2 alone, so y2 is optimized first and the
// configured initial squeezing then fixes B = sqrt(y / y2_opt) - 1.
struct Baseline00Result {
  double beta = 0.0;
  int k1 = 0;
  int k2 = 0;
  double y2_opt = 0.0;
  double fid00 = 0.0;
  double baseline_S_dB = 0.0;
  bool feasible = false;  // false when the baseline squeezing gives y < y2_opt
  double B = 0.0;
  double probability = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Fidelity of the vacuum-ancilla conditional state at reduced squeezing y2, computed by
// the interferometer oracle at a representative (y, B) pair with y / (1 + B)^2 = y2.
double fidelity_00(int k1, int k2, double y2, const FockVector& target, const CutoffPolicy& cutoff = {});

// Probability of (k1, k2) with vacuum ancillas at initial squeezing y and splitter B.
double probability_00(int k1, int k2, double y, double B, const CutoffPolicy& cutoff = {});

struct Y2Optimum {
  double y2 = 0.0;
  double fid00 = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Fid00-optimal y2 for (k1, k2, beta) by a coarse scan and golden-section refinement.
Y2Optimum optimize_y2_00(int k1, int k2, double beta, const BaselineSettings& settings = {});

// Completes a baseline from a y2 optimum and the configured initial squeezing.
Baseline00Result baseline_at(int k1, int k2, double beta, const Y2Optimum& opt, double baseline_S_dB,
                             const CutoffPolicy& cutoff = {});

Baseline00Result baseline00(int k1, int k2, double beta, double baseline_S_dB,
                            const BaselineSettings& settings = {});

// B that maps initial squeezing y onto reduced squeezing y2 through y = y2 (1 + B)^2.
double splitter_for_reduction(double y, double y2);

struct GainMetrics {
  double beta = 0.0;
  int k1 = 0;
  int k2 = 0;
  double fid11 = 0.0;
  double fid00 = 0.0;
  double g_dB = 0.0;
  double p11 = 0.0;
  double p00 = 0.0;
  double j_dB = 0.0;
  double baseline_S_dB = 0.0;
  bool feasible = true;       // baseline squeezing large enough for the optimal y2
  bool infinite_gain = false; // baseline probability vanished
};

GainMetrics gain_from(const OptimizationResult& with_photons, const Baseline00Result& baseline);

// Rows ordered by (pattern, beta, baseline squeezing).
std::vector<GainMetrics> gain_curves(std::span<const std::pair<int, int>> patterns, std::span<const double> betas,
                                     std::span<const double> baseline_S_dB, const SearchBox& box = {},
                                     const OptimizerSettings& settings = {},
                                     const BaselineSettings& baseline = {}, int threads = 1);

}  // namespace scsgen
