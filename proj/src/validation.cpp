#include "scsgen/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "scsgen/states.hpp"

namespace scsgen {

namespace {

constexpr double kStateYs[] = {0.1, 0.2, 0.3};
constexpr double kStateBs[] = {0.3, 1.0, 2.5};

void record(SuiteResult& s, double residual, const std::string& params) {
  ++s.cases;
  const bool bad = !(residual <= s.tolerance);
  if (!std::isnan(s.max_residual) && (std::isnan(residual) || residual > s.max_residual)) s.max_residual = residual;
  if (bad && s.passed) {
    s.passed = false;
    std::ostringstream os;
    os << params << " residual=" << residual;
    s.first_failure = os.str();
  }
}

std::string tuple(std::initializer_list<std::pair<const char*, double>> items) {
  std::ostringstream os;
  os.precision(12);
  bool first = true;
  for (const auto& [k, v] : items) {
    os << (first ? "" : " ") << k << '=' << v;
    first = false;
  }
  return os.str();
}

double max_abs_difference(const FockVector& a, const FockVector& b) {
  const int n = std::max(a.cutoff(), b.cutoff());
  double worst = 0.0;
  for (int i = 0; i <= n; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

bool ValidationReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

SuiteResult check_convention_lock(const BsKernel& bs) {
  SuiteResult s{"convention_lock", true, 0.0, 1e-14, 0, {}};
  for (double B : {0.3, 1.0, 2.5}) {
    const BeamSplitter b = BeamSplitter::from_ratio(B);
    record(s, std::abs(bs(1, 0, 1, 0, b) - b.t), tuple({{"B", B}, {"element", 0}}));
    record(s, std::abs(bs(0, 1, 1, 0, b) + b.r), tuple({{"B", B}, {"element", 1}}));
    record(s, std::abs(bs(1, 0, 0, 1, b) - b.r), tuple({{"B", B}, {"element", 2}}));
    record(s, std::abs(bs(0, 1, 0, 1, b) - b.t), tuple({{"B", B}, {"element", 3}}));
  }
  return s;
}

SuiteResult check_unitarity(const BsKernel& bs, int max_total, double tolerance) {
  SuiteResult s{"unitarity", true, 0.0, tolerance, 0, {}};
  for (double B : {0.3, 1.0, 2.5}) {
    const BeamSplitter b = BeamSplitter::from_ratio(B);
    for (int N = 0; N <= max_total; ++N) {
      // Columns indexed by input m (n = N - m), rows by output p (q = N - p).
      for (int m1 = 0; m1 <= N; ++m1) {
        for (int m2 = m1; m2 <= N; ++m2) {
          double dot = 0.0;
          for (int p = 0; p <= N; ++p) dot += bs(p, N - p, m1, N - m1, b) * bs(p, N - p, m2, N - m2, b);
          const double expected = m1 == m2 ? 1.0 : 0.0;
          record(s, std::abs(dot - expected), tuple({{"B", B}, {"N", N}, {"m1", m1}, {"m2", m2}}));
        }
      }
    }
  }
  return s;
}

SuiteResult check_oracle_states(double tolerance) {
  SuiteResult s{"oracle_states", true, 0.0, tolerance, 0, {}};
  for (double y : kStateYs) {
    const FockVector input = smsv_state(squeeze_from(SqueezeAnchor::parameter, y));
    for (double B : kStateBs) {
      const BeamSplitter bs = BeamSplitter::from_ratio(B);
      const double y2 = y / ((1.0 + B) * (1.0 + B));
      for (int k1 = 1; k1 <= 4; ++k1) {
        for (int k2 = 1; k2 <= 4; ++k2) {
          const HeraldOutcome o = cascade_herald(input, 1, 1, bs, k1, k2);
          const FockVector c = conditional_state(HeraldPattern(k1, k2), y2, B);
          const double r = o.feasible ? max_abs_difference(o.state, c) : 1.0;
          record(s, r, tuple({{"k1", k1}, {"k2", k2}, {"y", y}, {"B", B}}));
        }
      }
    }
  }
  return s;
}

SuiteResult check_oracle_probabilities(const ProbabilityFn& probability, double tolerance) {
  SuiteResult s{"oracle_probabilities", true, 0.0, tolerance, 0, {}};
  for (double y : kStateYs) {
    const SqueezeParams sq = squeeze_from(SqueezeAnchor::parameter, y);
    const FockVector input = smsv_state(sq);
    for (double B : kStateBs) {
      const BeamSplitter bs = BeamSplitter::from_ratio(B);
      const CascadeParams c = CascadeParams::make(sq, bs);
      for (int k1 = 1; k1 <= 4; ++k1) {
        for (int k2 = 1; k2 <= 4; ++k2) {
          const double oracle = cascade_herald(input, 1, 1, bs, k1, k2).probability;
          const double closed = probability(HeraldPattern(k1, k2), c);
          record(s, std::abs(closed - oracle) / oracle, tuple({{"k1", k1}, {"k2", k2}, {"y", y}, {"B", B}}));
        }
      }
    }
  }
  return s;
}

SuiteResult check_two_route_normalization(double tolerance) {
  SuiteResult s{"two_route_normalization", true, 0.0, tolerance, 0, {}};
  for (double y2 : {0.05, 0.15, 0.3}) {
    for (double B : {0.2, 1.0, 3.0}) {
      for (int k1 = 1; k1 <= 6; ++k1) {
        for (int k2 = 1; k2 <= 6; ++k2) {
          const HeraldPattern p(k1, k2);
          const std::string params = tuple({{"k1", k1}, {"k2", k2}, {"y2", y2}, {"B", B}});
          try {
            const double direct = normalization_G_direct(p, y2, B);
            const double closed = normalization_G_closed(p, y2, B);
            record(s, std::abs(closed - direct) / direct, params);
          } catch (const std::exception& e) {
            record(s, std::numeric_limits<double>::infinity(), params + " error=" + e.what());
          }
        }
      }
    }
  }
  return s;
}

SuiteResult check_completeness(double tolerance) {
  SuiteResult s{"completeness", true, 0.0, tolerance, 0, {}};
  const double y = 0.2;
  const double B = 1.0;
  const FockVector input = smsv_state(squeeze_from(SqueezeAnchor::parameter, y));
  const int kmax = input.cutoff() + 2;
  const std::vector<HeraldOutcome> table = herald_distribution(input, 1, 1, BeamSplitter::from_ratio(B), kmax);
  double total = 0.0;
  for (const HeraldOutcome& o : table) total += o.probability;
  record(s, std::abs(total - 1.0), tuple({{"y", y}, {"B", B}, {"kmax", kmax}}));
  return s;
}

ValidationReport run_validation(const ValidationHooks& hooks, double oracle_tolerance) {
  ValidationReport r;
  r.suites.push_back(check_convention_lock(hooks.bs));
  r.suites.push_back(check_unitarity(hooks.bs));
  r.suites.push_back(check_oracle_states(oracle_tolerance));
  r.suites.push_back(check_oracle_probabilities(hooks.probability, oracle_tolerance));
  r.suites.push_back(check_two_route_normalization(oracle_tolerance));
  r.suites.push_back(check_completeness());
  return r;
}

}  // namespace scsgen
