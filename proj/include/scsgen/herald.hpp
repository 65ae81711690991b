#pragma once

#include <array>
#include <optional>

#include "scsgen/oracle.hpp"
#include "scsgen/states.hpp"

namespace scsgen {

// Detector outcome with at least one photon in each measuring channel; outcomes with an
// empty channel have no closed form and go through cascade_herald instead.
struct HeraldPattern {
  int k1 = 1;
  int k2 = 1;

  HeraldPattern(int k1, int k2);
  int total() const { return k1 + k2; }
  Parity parity() const { return total() % 2 == 0 ? Parity::even : Parity::odd; }
};

// Single-photon heralding amplitude c_k(y, B).
double herald_amplitude_ck(int k, double y, double B);

// Quadratic weight a0 + a1 j + a2 j^2 shared by every conditional-state amplitude, and the
// coefficients A0..A4 of its square.
struct QuadraticWeights {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  std::array<double, 5> A{};

  double weight(double j) const { return a0 + j * (a1 + j * a2); }
  // sum_l A_l j^l, equal to weight(j)^2.
  double squared_weight(double j) const;
};

QuadraticWeights quadratic_weights(const HeraldPattern& p, double B);

// Normalized, sign-canonical mode-1 state after detecting (k1, k2) with both ancillas
// carrying one photon. Amplitude at |j>, j of the parity of k1 + k2, is proportional to
// y2^(j/2)/sqrt(j!) * (2v)!/v! * weight(j), v = (j + k1 + k2 - 2)/2.
FockVector conditional_state(const HeraldPattern& p, double y2, double B, const CutoffPolicy& cutoff = {});

// Unnormalized amplitude at |j> (zero off the pattern's parity class).
double conditional_amplitude(const HeraldPattern& p, double y2, double B, int j);

// Squared norm of the unnormalized amplitudes above, summed over the truncated support.
double normalization_G_direct(const HeraldPattern& p, double y2, double B, const CutoffPolicy& cutoff = {});

// The same normalization from derivatives of Z(x) = 1/sqrt(1 - 4x^2):
//   A0 Z^(K-2)(y2) + sum_{l=1..4} A_l (y2 d/dy2)^(l-1) (y2 Z^(K-1)(y2)),  K = k1 + k2.
// Without an explicit degree the series is grown from degree 200 until doubling changes
// the value by less than 1e-13 relative. Throws ConvergenceError otherwise.
double normalization_G_closed(const HeraldPattern& p, double y2, double B,
                              std::optional<int> degree = std::nullopt);

// Outcome probability c_k1(y1, B)^2 c_k2(y2, B)^2 G(y2, B) / cosh(s).
double herald_probability(const HeraldPattern& p, const CascadeParams& c, const CutoffPolicy& cutoff = {});

}  // namespace scsgen
