#pragma once

#include <vector>

#include "scsgen/states.hpp"

namespace scsgen {

// Beam splitter acting as a1+ -> t a1+ - r a2+, a2+ -> r a1+ + t a2+ with B = R/T.
struct BeamSplitter {
  double B = 1.0;
  double t = 0.0;
  double r = 0.0;
  double T = 0.0;
  double R = 0.0;

  static BeamSplitter from_ratio(double B);
};

// Squeezing and splitter of the two-splitter cascade with the reduced parameters
// y1 = y/(1+B) after the first splitter and y2 = y/(1+B)^2 after the second.
struct CascadeParams {
  SqueezeParams squeeze;
  BeamSplitter bs;
  double y1 = 0.0;
  double y2 = 0.0;

  static CascadeParams make(const SqueezeParams& squeeze, const BeamSplitter& bs);
};

// <p, q| U |m, n> for a single beam splitter; zero unless p + q = m + n.
double bs_element(int p, int q, int m, int n, const BeamSplitter& bs);

// Column of U for input |m, n>: entry p holds <p, m + n - p| U |m, n>.
std::vector<double> bs_apply(int m, int n, const BeamSplitter& bs);

struct HeraldOutcome {
  int k1 = 0;
  int k2 = 0;
  FockVector state;          // normalized, sign-canonical; empty when infeasible
  double probability = 0.0;
  bool feasible = false;     // false when no amplitude reaches (k1, k2)
};

// Mode 1 carries `input`, modes 2 and 3 carry `anc2`, `anc3` photons. Applies the (1,2)
// splitter then the (1,3) splitter and projects modes 2, 3 onto |k1>, |k2>.
HeraldOutcome cascade_herald(const FockVector& input, int anc2, int anc3, const BeamSplitter& bs,
                             int k1, int k2);

// Every outcome with k1, k2 <= kmax, ordered by (k1, k2) regardless of `threads`.
std::vector<HeraldOutcome> herald_distribution(const FockVector& input, int anc2, int anc3,
                                               const BeamSplitter& bs, int kmax, int threads = 1);

}  // namespace scsgen
