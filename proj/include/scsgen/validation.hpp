#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "scsgen/herald.hpp"
#include "scsgen/oracle.hpp"

namespace scsgen {

struct SuiteResult {
  std::string name;
  bool passed = true;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::size_t cases = 0;
  std::string first_failure;  // full parameter tuple of the first failing case
};

struct ValidationReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
};

// Checked implementations are injectable so the suites can be exercised against
// deliberately broken variants.
using BsKernel = std::function<double(int, int, int, int, const BeamSplitter&)>;
using ProbabilityFn = std::function<double(const HeraldPattern&, const CascadeParams&)>;

struct ValidationHooks {
  BsKernel bs = [](int p, int q, int m, int n, const BeamSplitter& b) { return bs_element(p, q, m, n, b); };
  ProbabilityFn probability = [](const HeraldPattern& p, const CascadeParams& c) { return herald_probability(p, c); };
};

// One-photon block equals (t, -r; r, t).
SuiteResult check_convention_lock(const BsKernel& bs);
// Fock blocks with total photon number <= max_total are orthonormal.
SuiteResult check_unitarity(const BsKernel& bs, int max_total = 14, double tolerance = 1e-12);
// Closed-form conditional states against the oracle, k1, k2 in [1,4], y in {0.1,0.2,0.3},
// B in {0.3,1,2.5}; max-abs amplitude residual after sign canonicalization.
SuiteResult check_oracle_states(double tolerance = 1e-9);
// Closed-form outcome probabilities against the oracle on the same grid, relative.
SuiteResult check_oracle_probabilities(const ProbabilityFn& probability, double tolerance = 1e-9);
// Derivative-series normalization against direct summation, k1, k2 in [1,6],
// y2 in {0.05,0.15,0.3}, B in {0.2,1,3}, relative.
SuiteResult check_two_route_normalization(double tolerance = 1e-9);
// All oracle outcomes at y = 0.2, B = 1 sum to one.
SuiteResult check_completeness(double tolerance = 1e-8);

ValidationReport run_validation(const ValidationHooks& hooks = {}, double oracle_tolerance = 1e-9);

}  // namespace scsgen
