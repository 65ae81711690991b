#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "scsgen/errors.hpp"

namespace scsgen {

// Largest photon number any state in the library will be expanded to.
inline constexpr int kMaxCutoff = 20000;

// How a Fock expansion is truncated. `fixed` unset selects the automatic tail rule.
struct CutoffPolicy {
  std::optional<int> fixed;
  double tolerance = 1e-10;

  static CutoffPolicy automatic(double tolerance = 1e-10) { return {std::nullopt, tolerance}; }
  static CutoffPolicy at(int cutoff, double tolerance = 1e-10) { return {cutoff, tolerance}; }

  bool is_auto() const { return !fixed.has_value(); }
};

namespace detail {

inline double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

}  // namespace detail

// Walks the support n = first, first + step, ... of a state whose squared amplitude
// envelope is exp(log_sq(n)) and returns the automatic cutoff: the first index past the
// envelope peak whose term is below 1e-32 of the running norm, plus four more support terms.
template <class LogSquared>
int auto_cutoff(int first, int step, LogSquared&& log_sq) {
  constexpr double kRelativeFloor = -73.682722975809468;  // ln(1e-32), amplitudes near double epsilon
  double running = -std::numeric_limits<double>::infinity();
  double previous = std::numeric_limits<double>::infinity();
  for (int n = first; n <= kMaxCutoff; n += step) {
    const double term = log_sq(n);
    running = detail::log_add(running, term);
    const bool decreasing = term < previous;
    if (decreasing && (term == -std::numeric_limits<double>::infinity() ||
                       term < kRelativeFloor + running)) {
      const int cutoff = n + 4 * step;
      if (cutoff > kMaxCutoff) break;
      return cutoff;
    }
    previous = term;
  }
  throw TruncationError("automatic cutoff exceeds " + std::to_string(kMaxCutoff) + " photons");
}

}  // namespace scsgen
