#include "scsgen/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "scsgen/errors.hpp"
#include "scsgen/special.hpp"

namespace scsgen {

SqueezeParams squeeze_from(SqueezeAnchor anchor, double value) {
  if (!std::isfinite(value)) throw DomainError("squeezing value must be finite");
  double s = 0.0;
  switch (anchor) {
    case SqueezeAnchor::amplitude:
      if (value < 0.0) throw DomainError("squeezing amplitude s must be >= 0");
      s = value;
      break;
    case SqueezeAnchor::parameter:
      if (value < 0.0 || value >= 0.5) throw DomainError("squeezing parameter y must lie in [0, 0.5)");
      s = std::atanh(2.0 * value);
      break;
    case SqueezeAnchor::decibels:
      if (value < 0.0) throw DomainError("squeezing in dB must be >= 0");
      s = value / kDecibelsPerNeper;
      break;
  }
  SqueezeParams p;
  p.s = s;
  p.y = anchor == SqueezeAnchor::parameter ? value : std::tanh(s) / 2.0;
  p.s_db = anchor == SqueezeAnchor::decibels ? value : kDecibelsPerNeper * s;
  const double sh = std::sinh(s);
  p.mean_photons = sh * sh;
  if (p.y >= 0.5) throw DomainError("squeezing too strong to represent (y rounds to 0.5)");
  return p;
}

const char* to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::mixed: return "mixed";
  }
  return "mixed";
}

namespace {

Parity detect_parity(const std::vector<double>& a) {
  bool even_only = true;
  bool odd_only = true;
  bool any = false;
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a[n] == 0.0) continue;
    any = true;
    if (n % 2 == 0) odd_only = false;
    else even_only = false;
  }
  if (!any) return Parity::mixed;
  if (even_only) return Parity::even;
  if (odd_only) return Parity::odd;
  return Parity::mixed;
}

void check_fixed_cutoff(int cutoff) {
  if (cutoff < 0) throw DomainError("cutoff must be nonnegative");
  if (cutoff > kMaxCutoff) throw DomainError("cutoff exceeds " + std::to_string(kMaxCutoff));
}

// States whose exact norm is 1: the dropped tail is whatever the kept terms miss.
void check_norm_deficit(const FockVector& v, double tolerance, const char* what) {
  const double deficit = 1.0 - v.norm_squared();
  if (deficit > tolerance) {
    throw TruncationError(std::string(what) + ": cutoff " + std::to_string(v.cutoff()) +
                          " drops norm " + std::to_string(deficit));
  }
}

}  // namespace

FockVector::FockVector(std::vector<double> amplitudes)
    : amplitudes_(std::move(amplitudes)), parity_(detect_parity(amplitudes_)) {}

FockVector::FockVector(std::vector<double> amplitudes, Parity parity)
    : amplitudes_(std::move(amplitudes)), parity_(parity) {
  if (parity_ == Parity::mixed) return;
  const std::size_t wrong = parity_ == Parity::even ? 1 : 0;
  for (std::size_t n = wrong; n < amplitudes_.size(); n += 2) {
    if (amplitudes_[n] != 0.0) {
      throw DomainError(std::string("amplitude at |") + std::to_string(n) + "> violates " +
                        to_string(parity_) + " parity");
    }
  }
}

double FockVector::operator[](int n) const {
  if (n < 0 || n >= static_cast<int>(amplitudes_.size())) return 0.0;
  return amplitudes_[static_cast<std::size_t>(n)];
}

double FockVector::norm_squared() const {
  double sum = 0.0;
  for (double a : amplitudes_) sum += a * a;
  return sum;
}

double FockVector::mean_photons() const {
  double sum = 0.0;
  for (std::size_t n = 0; n < amplitudes_.size(); ++n) sum += static_cast<double>(n) * amplitudes_[n] * amplitudes_[n];
  return sum;
}

FockVector FockVector::normalized() const {
  const double norm = std::sqrt(norm_squared());
  if (norm == 0.0) throw DomainError("cannot normalize the zero vector");
  std::vector<double> out(amplitudes_);
  for (double& a : out) a /= norm;
  return FockVector(std::move(out), parity_);
}

FockVector FockVector::sign_canonical() const {
  double largest = 0.0;
  for (double a : amplitudes_) largest = std::max(largest, std::abs(a));
  for (double a : amplitudes_) {
    if (std::abs(a) > 1e-12 * largest) {
      if (a > 0.0) return *this;
      std::vector<double> out(amplitudes_);
      for (double& x : out) x = -x;
      return FockVector(std::move(out), parity_);
    }
  }
  return *this;
}

ScsTarget::ScsTarget(double beta_, ScsSign sign_) : beta(beta_), sign(sign_) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("SCS amplitude beta must be > 0");
}

double ScsTarget::norm_factor() const {
  // 1 -+ exp(-2 beta^2) via expm1 so the odd target stays finite as beta -> 0.
  const double bracket = sign == ScsSign::plus ? 2.0 + std::expm1(-2.0 * beta * beta)
                                               : -std::expm1(-2.0 * beta * beta);
  return 1.0 / std::sqrt(2.0 * bracket);
}

FockVector smsv_state(const SqueezeParams& p, const CutoffPolicy& policy) {
  if (p.y < 0.0 || p.y >= 0.5) throw DomainError("squeezing parameter y must lie in [0, 0.5)");
  const double log_prefactor = -0.5 * std::log(std::cosh(p.s));
  const auto log_amplitude = [&](int n2) {
    const int n = n2 / 2;
    if (n > 0 && p.y == 0.0) return -std::numeric_limits<double>::infinity();
    return log_prefactor + log_power(p.y, n) + 0.5 * log_factorial(2 * n) - log_factorial(n);
  };

  int cutoff = 0;
  if (policy.fixed) {
    cutoff = *policy.fixed;
    check_fixed_cutoff(cutoff);
    if (cutoff % 2 != 0) throw DomainError("squeezed-vacuum cutoff must be even");
  } else {
    cutoff = auto_cutoff(0, 2, [&](int n) { return 2.0 * log_amplitude(n); });
  }

  std::vector<double> amps(static_cast<std::size_t>(cutoff) + 1, 0.0);
  for (int n = 0; n <= cutoff; n += 2) amps[static_cast<std::size_t>(n)] = std::exp(log_amplitude(n));
  FockVector v(std::move(amps), Parity::even);
  check_norm_deficit(v, policy.tolerance, "squeezed vacuum");
  return v;
}

FockVector scs_state(const ScsTarget& target, const CutoffPolicy& policy) {
  const double beta = target.beta;
  const double log_prefactor = std::log(2.0 * target.norm_factor()) - 0.5 * beta * beta;
  const auto log_amplitude = [&](int n) {
    return log_prefactor + n * std::log(beta) - 0.5 * log_factorial(n);
  };
  const int first = target.sign == ScsSign::plus ? 0 : 1;

  int cutoff = 0;
  if (policy.fixed) {
    cutoff = *policy.fixed;
    check_fixed_cutoff(cutoff);
    if (cutoff < beta * beta + 10.0 * beta) {
      throw TruncationError("SCS cutoff " + std::to_string(cutoff) + " below beta^2 + 10 beta");
    }
  } else {
    cutoff = auto_cutoff(first, 2, [&](int n) { return 2.0 * log_amplitude(n); });
  }

  std::vector<double> amps(static_cast<std::size_t>(cutoff) + 1, 0.0);
  for (int n = first; n <= cutoff; n += 2) amps[static_cast<std::size_t>(n)] = std::exp(log_amplitude(n));
  FockVector v(std::move(amps), target.parity());
  check_norm_deficit(v, policy.tolerance, "SCS target");
  return v;
}

double overlap(const FockVector& a, const FockVector& b) {
  const int n = std::min(a.cutoff(), b.cutoff());
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) sum += a[i] * b[i];
  return sum;
}

double fidelity(const FockVector& a, const FockVector& b) {
  const double o = overlap(a, b);
  return std::min(1.0, o * o);
}

}  // namespace scsgen
