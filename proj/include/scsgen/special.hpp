#pragma once

#include <cmath>
#include <vector>

namespace scsgen {

namespace detail {

inline const std::vector<double>& log_factorial_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(1 << 16);
    for (std::size_t n = 0; n < t.size(); ++n) t[n] = std::lgamma(static_cast<double>(n) + 1.0);
    return t;
  }();
  return table;
}

}  // namespace detail

inline double log_factorial(int n) {
  const auto& table = detail::log_factorial_table();
  if (n >= 0 && static_cast<std::size_t>(n) < table.size()) return table[static_cast<std::size_t>(n)];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

inline double log_binomial(int n, int k) {
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

// exponent * ln(base) with the convention 0 * ln(0) = 0.
inline double log_power(double base, double exponent) {
  if (exponent == 0.0) return 0.0;
  return exponent * std::log(base);
}

}  // namespace scsgen
