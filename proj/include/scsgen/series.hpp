#pragma once

#include <span>
#include <vector>

namespace scsgen {

// Finite power series sum_k c_k x^k. Coefficients are held in extended precision because
// the derivatives of Z grow like 4^n n^m and overflow double near degree 1000.
class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_{0.0L} {}
  explicit TruncatedSeries(std::vector<long double> coeffs, bool vanished = false);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const long double> coefficients() const { return coeffs_; }
  long double coefficient(int k) const;
  // Horner sum over the stored coefficients; nothing beyond the degree is implied.
  long double evaluate(long double x) const;
  // Set when the series was differentiated more times than its degree.
  bool vanished() const { return vanished_; }

 private:
  std::vector<long double> coeffs_;
  bool vanished_ = false;
};

// Maclaurin series of Z(x) = 1/sqrt(1 - 4x^2): coefficient of x^(2n) is binom(2n, n).
TruncatedSeries z_series(int degree);

TruncatedSeries differentiate(const TruncatedSeries& s, int order);

// (x d/dx)^times: c_k -> k^times c_k.
TruncatedSeries euler_apply(const TruncatedSeries& s, int times);

TruncatedSeries shift_multiply_x(const TruncatedSeries& s);

}  // namespace scsgen
