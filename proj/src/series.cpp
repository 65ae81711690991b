#include "scsgen/series.hpp"

#include "scsgen/errors.hpp"

namespace scsgen {

TruncatedSeries::TruncatedSeries(std::vector<long double> coeffs, bool vanished)
    : coeffs_(std::move(coeffs)), vanished_(vanished) {
  if (coeffs_.empty()) coeffs_.push_back(0.0L);
}

long double TruncatedSeries::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0.0L;
  return coeffs_[static_cast<std::size_t>(k)];
}

long double TruncatedSeries::evaluate(long double x) const {
  long double acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

TruncatedSeries z_series(int degree) {
  if (degree < 0) throw DomainError("series degree must be >= 0");
  std::vector<long double> c(static_cast<std::size_t>(degree) + 1, 0.0L);
  long double central = 1.0L;  // binom(2n, n)
  for (int n = 0; 2 * n <= degree; ++n) {
    c[static_cast<std::size_t>(2 * n)] = central;
    central = central * 2.0L * (2.0L * n + 1.0L) / (n + 1.0L);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries differentiate(const TruncatedSeries& s, int order) {
  if (order < 0) throw DomainError("derivative order must be >= 0");
  if (order == 0) return s;
  if (order > s.degree()) return TruncatedSeries({0.0L}, true);
  std::vector<long double> c(static_cast<std::size_t>(s.degree() - order) + 1);
  for (int k = order; k <= s.degree(); ++k) {
    long double falling = 1.0L;  // k!/(k - order)!
    for (int i = 0; i < order; ++i) falling *= static_cast<long double>(k - i);
    c[static_cast<std::size_t>(k - order)] = s.coefficient(k) * falling;
  }
  return TruncatedSeries(std::move(c), s.vanished());
}

TruncatedSeries euler_apply(const TruncatedSeries& s, int times) {
  if (times < 0) throw DomainError("Euler operator power must be >= 0");
  std::vector<long double> c(s.coefficients().begin(), s.coefficients().end());
  for (std::size_t k = 0; k < c.size(); ++k) {
    long double factor = 1.0L;
    for (int i = 0; i < times; ++i) factor *= static_cast<long double>(k);
    c[k] *= factor;
  }
  return TruncatedSeries(std::move(c), s.vanished());
}

TruncatedSeries shift_multiply_x(const TruncatedSeries& s) {
  std::vector<long double> c;
  c.reserve(s.coefficients().size() + 1);
  c.push_back(0.0L);
  c.insert(c.end(), s.coefficients().begin(), s.coefficients().end());
  return TruncatedSeries(std::move(c), s.vanished());
}

}  // namespace scsgen
