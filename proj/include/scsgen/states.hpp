#pragma once

#include <span>
#include <vector>

#include "scsgen/cutoff.hpp"

namespace scsgen {

// Squeezing of a single-mode squeezed vacuum in its four interchangeable forms.
struct SqueezeParams {
  double s = 0.0;             // squeezing amplitude
  double y = 0.0;             // tanh(s)/2, in [0, 0.5)
  double s_db = 0.0;          // -10 log10(exp(-2s))
  double mean_photons = 0.0;  // sinh^2(s)
};

enum class SqueezeAnchor { amplitude, parameter, decibels };

SqueezeParams squeeze_from(SqueezeAnchor anchor, double value);

// 20 log10(e): decibels per unit of squeezing amplitude.
inline constexpr double kDecibelsPerNeper = 8.685889638065035;

enum class Parity { even, odd, mixed };

const char* to_string(Parity p);

// Real amplitudes over photon numbers 0..cutoff, stored densely. A parity tag other than
// `mixed` guarantees the opposite-parity entries are exactly zero.
class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(std::vector<double> amplitudes);
  FockVector(std::vector<double> amplitudes, Parity parity);

  std::span<const double> amplitudes() const { return amplitudes_; }
  // Zero beyond the cutoff.
  double operator[](int n) const;
  int cutoff() const { return static_cast<int>(amplitudes_.size()) - 1; }
  bool empty() const { return amplitudes_.empty(); }
  Parity parity() const { return parity_; }

  double norm_squared() const;
  double mean_photons() const;
  FockVector normalized() const;
  // Global sign fixed so the lowest-index non-negligible amplitude is positive.
  FockVector sign_canonical() const;

 private:
  std::vector<double> amplitudes_;
  Parity parity_ = Parity::mixed;
};

enum class ScsSign { plus, minus };

// Target N_pm (|beta> +- |-beta>).
struct ScsTarget {
  double beta = 1.0;
  ScsSign sign = ScsSign::plus;

  ScsTarget(double beta, ScsSign sign);
  double norm_factor() const;
  Parity parity() const { return sign == ScsSign::plus ? Parity::even : Parity::odd; }
};

FockVector smsv_state(const SqueezeParams& p, const CutoffPolicy& cutoff = {});
FockVector scs_state(const ScsTarget& target, const CutoffPolicy& cutoff = {});

// Real overlap sum_n a_n b_n; shorter vector zero-padded.
double overlap(const FockVector& a, const FockVector& b);
// Squared overlap of two normalized real states.
double fidelity(const FockVector& a, const FockVector& b);

}  // namespace scsgen
