#include "scsgen/herald.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "scsgen/errors.hpp"
#include "scsgen/series.hpp"
#include "scsgen/special.hpp"

namespace scsgen {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_herald_domain(double y2, double B) {
  if (!(y2 >= 0.0 && y2 < 0.5)) throw DomainError("reduced squeezing y2 must lie in [0, 0.5)");
  if (!(B > 0.0) || !std::isfinite(B)) throw DomainError("beam-splitter parameter B must be > 0");
}

// Unnormalized amplitudes stored as exp(log_scale) * scaled[j].
struct ScaledAmplitudes {
  std::vector<double> scaled;
  double log_scale = kNegInf;
  double log_norm = kNegInf;  // ln G
  Parity parity = Parity::even;
};

ScaledAmplitudes unnormalized_amplitudes(const HeraldPattern& p, double y2, double B,
                                         const CutoffPolicy& policy) {
  check_herald_domain(y2, B);
  const QuadraticWeights w = quadratic_weights(p, B);
  const int K = p.total();
  const int first = K % 2;

  // ln|amplitude| without the weight factor.
  const auto log_base = [&](int j) {
    const int v = (j + K - 2) / 2;
    return log_power(y2, 0.5 * j) - 0.5 * log_factorial(j) + log_factorial(2 * v) - log_factorial(v);
  };
  // Upper envelope of ln(amplitude^2), monotone in the tail even where weight(j) crosses zero.
  const auto log_envelope = [&](int j) {
    const double jj = std::max(j, 1);
    const double bound = std::abs(w.a0) + std::abs(w.a1) * jj + std::abs(w.a2) * jj * jj;
    return 2.0 * (log_base(j) + std::log(bound));
  };

  int cutoff = 0;
  if (policy.fixed) {
    cutoff = *policy.fixed;
    if (cutoff < first + 2 || cutoff > kMaxCutoff) throw DomainError("conditional-state cutoff out of range");
    const int last = cutoff - (cutoff - first) % 2;
    const double e_last = log_envelope(last);
    const double e_prev = log_envelope(last - 2);
    double running = kNegInf;
    for (int j = first; j <= last; j += 2) running = detail::log_add(running, log_envelope(j));
    if (e_last != kNegInf) {
      const double ratio = std::exp(e_last - e_prev);
      const double tail = ratio < 1.0 ? std::exp(e_last - running) * ratio / (1.0 - ratio)
                                      : std::numeric_limits<double>::infinity();
      if (tail > policy.tolerance) {
        throw TruncationError("conditional-state cutoff " + std::to_string(cutoff) +
                              " leaves relative tail " + std::to_string(tail));
      }
    }
  } else {
    cutoff = auto_cutoff(first, 2, log_envelope);
  }

  ScaledAmplitudes out;
  out.parity = p.parity();
  std::vector<double> logs(static_cast<std::size_t>(cutoff) + 1, kNegInf);
  for (int j = first; j <= cutoff; j += 2) {
    const double weight = w.weight(j);
    if (weight == 0.0) continue;
    const double v = log_base(j) + std::log(std::abs(weight));
    logs[static_cast<std::size_t>(j)] = v;
    out.log_scale = std::max(out.log_scale, v);
  }
  out.scaled.assign(logs.size(), 0.0);
  if (out.log_scale == kNegInf) return out;
  double sum = 0.0;
  for (int j = first; j <= cutoff; j += 2) {
    const auto idx = static_cast<std::size_t>(j);
    if (logs[idx] == kNegInf) continue;
    const double a = std::exp(logs[idx] - out.log_scale);
    out.scaled[idx] = w.weight(j) < 0.0 ? -a : a;
    sum += a * a;
  }
  out.log_norm = 2.0 * out.log_scale + std::log(sum);
  return out;
}

}  // namespace

HeraldPattern::HeraldPattern(int k1_, int k2_) : k1(k1_), k2(k2_) {
  if (k1 < 1 || k2 < 1) {
    throw DomainError("closed forms need k1 >= 1 and k2 >= 1 (got " + std::to_string(k1) + ", " +
                      std::to_string(k2) + ")");
  }
}

double herald_amplitude_ck(int k, double y, double B) {
  if (k < 0) throw DomainError("photon number k must be >= 0");
  if (!(y >= 0.0 && y < 0.5)) throw DomainError("squeezing parameter must lie in [0, 0.5)");
  if (!(B > 0.0) || !std::isfinite(B)) throw DomainError("beam-splitter parameter B must be > 0");
  if (k == 0) return std::sqrt(B / (1.0 + B));
  // (yB)^((k-1)/2) is the positive real root.
  const double magnitude =
      std::exp(log_power(y * B, 0.5 * (k - 1)) + std::log(static_cast<double>(k)) - 0.5 * log_factorial(k)) /
      std::sqrt(1.0 + B);
  return (k % 2 == 1) ? magnitude : -magnitude;
}

double QuadraticWeights::squared_weight(double j) const {
  return A[0] + j * (A[1] + j * (A[2] + j * (A[3] + j * A[4])));
}

QuadraticWeights quadratic_weights(const HeraldPattern& p, double B) {
  const double k1 = p.k1;
  const double k2 = p.k2;
  QuadraticWeights w;
  w.a0 = 1.0 - (k2 - 1.0) / k1 * B;
  w.a1 = ((k2 - 1.0) * B - k1 - k2) / (k1 * k2) * B;
  w.a2 = B * B / (k1 * k2);
  w.A = {w.a0 * w.a0, 2.0 * w.a0 * w.a1, w.a1 * w.a1 + 2.0 * w.a0 * w.a2, 2.0 * w.a1 * w.a2, w.a2 * w.a2};
  return w;
}

double conditional_amplitude(const HeraldPattern& p, double y2, double B, int j) {
  check_herald_domain(y2, B);
  if (j < 0 || j % 2 != p.total() % 2) return 0.0;
  const int v = (j + p.total() - 2) / 2;
  const double weight = quadratic_weights(p, B).weight(j);
  const double magnitude =
      std::exp(log_power(y2, 0.5 * j) - 0.5 * log_factorial(j) + log_factorial(2 * v) - log_factorial(v));
  return magnitude * weight;
}

FockVector conditional_state(const HeraldPattern& p, double y2, double B, const CutoffPolicy& cutoff) {
  ScaledAmplitudes amps = unnormalized_amplitudes(p, y2, B, cutoff);
  if (amps.log_norm == kNegInf) throw DomainError("conditional state vanishes for these parameters");
  return FockVector(std::move(amps.scaled), amps.parity).normalized().sign_canonical();
}

double normalization_G_direct(const HeraldPattern& p, double y2, double B, const CutoffPolicy& cutoff) {
  return std::exp(unnormalized_amplitudes(p, y2, B, cutoff).log_norm);
}

namespace {

long double closed_G_at_degree(const HeraldPattern& p, long double y2, const QuadraticWeights& w, int degree) {
  const int K = p.total();
  const TruncatedSeries z = z_series(degree);
  const TruncatedSeries base = differentiate(z, K - 2);
  const TruncatedSeries inner = shift_multiply_x(differentiate(z, K - 1));
  if (base.vanished() || inner.vanished()) {
    throw ConvergenceError("series degree " + std::to_string(degree) + " below derivative order");
  }
  long double g = static_cast<long double>(w.A[0]) * base.evaluate(y2);
  for (int l = 1; l <= 4; ++l) {
    g += static_cast<long double>(w.A[static_cast<std::size_t>(l)]) * euler_apply(inner, l - 1).evaluate(y2);
  }
  return g;
}

}  // namespace

double normalization_G_closed(const HeraldPattern& p, double y2, double B, std::optional<int> degree) {
  check_herald_domain(y2, B);
  const QuadraticWeights w = quadratic_weights(p, B);
  constexpr long double kRelTol = 1e-13L;
  constexpr int kMaxDegree = 3200;

  const auto agree = [&](long double a, long double b) {
    return std::fabs(a - b) <= kRelTol * std::fabs(b);
  };
  if (degree) {
    if (*degree < 0 || *degree > kMaxDegree) throw DomainError("series degree out of range");
    const long double g = closed_G_at_degree(p, y2, w, *degree);
    const long double g2 = closed_G_at_degree(p, y2, w, 2 * *degree);
    if (!agree(g, g2)) {
      throw ConvergenceError("series degree " + std::to_string(*degree) + " not converged at y2 = " +
                             std::to_string(y2));
    }
    return static_cast<double>(g);
  }
  long double previous = closed_G_at_degree(p, y2, w, 200);
  for (int d = 400; d <= kMaxDegree; d *= 2) {
    const long double g = closed_G_at_degree(p, y2, w, d);
    if (agree(previous, g)) return static_cast<double>(g);
    previous = g;
  }
  throw ConvergenceError("Z-series not converged by degree " + std::to_string(kMaxDegree) +
                         " at y2 = " + std::to_string(y2));
}

double herald_probability(const HeraldPattern& p, const CascadeParams& c, const CutoffPolicy& cutoff) {
  const double c1 = herald_amplitude_ck(p.k1, c.y1, c.bs.B);
  const double c2 = herald_amplitude_ck(p.k2, c.y2, c.bs.B);
  const double G = normalization_G_direct(p, c.y2, c.bs.B, cutoff);
  return c1 * c1 * c2 * c2 * G / std::cosh(c.squeeze.s);
}

}  // namespace scsgen
