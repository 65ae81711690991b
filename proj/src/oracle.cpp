#include "scsgen/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "scsgen/errors.hpp"
#include "scsgen/parallel.hpp"
#include "scsgen/special.hpp"

namespace scsgen {

BeamSplitter BeamSplitter::from_ratio(double B) {
  if (!(B > 0.0) || !std::isfinite(B)) throw DomainError("beam-splitter parameter B must be > 0");
  BeamSplitter bs;
  bs.B = B;
  bs.T = 1.0 / (1.0 + B);
  bs.R = B / (1.0 + B);
  bs.t = std::sqrt(bs.T);
  bs.r = std::sqrt(bs.R);
  return bs;
}

CascadeParams CascadeParams::make(const SqueezeParams& squeeze, const BeamSplitter& bs) {
  CascadeParams c;
  c.squeeze = squeeze;
  c.bs = bs;
  c.y1 = squeeze.y / (1.0 + bs.B);
  c.y2 = c.y1 / (1.0 + bs.B);
  return c;
}

double bs_element(int p, int q, int m, int n, const BeamSplitter& bs) {
  if (p < 0 || q < 0 || m < 0 || n < 0 || p + q != m + n) return 0.0;
  // (t a1+ - r a2+)^m (r a1+ + t a2+)^n |0,0>: i photons of the first factor and l = p - i
  // of the second end in output mode 1.
  const double log_t = std::log(bs.t);
  const double log_r = std::log(bs.r);
  const double log_norm = 0.5 * (log_factorial(p) + log_factorial(q) - log_factorial(m) - log_factorial(n));
  const int lo = std::max(0, p - n);
  const int hi = std::min(m, p);
  if (lo > hi) return 0.0;

  double peak = -std::numeric_limits<double>::infinity();
  std::vector<double> logs;
  logs.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int i = lo; i <= hi; ++i) {
    const int l = p - i;
    const double v = log_binomial(m, i) + log_binomial(n, l) + (i + n - l) * log_t +
                     (m - i + l) * log_r + log_norm;
    logs.push_back(v);
    peak = std::max(peak, v);
  }
  if (peak == -std::numeric_limits<double>::infinity()) return 0.0;
  double sum = 0.0;
  for (int i = lo; i <= hi; ++i) {
    const double sign = (m - i) % 2 == 0 ? 1.0 : -1.0;
    sum += sign * std::exp(logs[static_cast<std::size_t>(i - lo)] - peak);
  }
  return sum * std::exp(peak);
}

std::vector<double> bs_apply(int m, int n, const BeamSplitter& bs) {
  if (m < 0 || n < 0) throw DomainError("photon numbers must be >= 0");
  std::vector<double> column(static_cast<std::size_t>(m + n) + 1);
  for (int p = 0; p <= m + n; ++p) column[static_cast<std::size_t>(p)] = bs_element(p, m + n - p, m, n, bs);
  return column;
}

HeraldOutcome cascade_herald(const FockVector& input, int anc2, int anc3, const BeamSplitter& bs,
                             int k1, int k2) {
  if (anc2 < 0 || anc2 > 1 || anc3 < 0 || anc3 > 1) throw DomainError("ancilla photon numbers must be 0 or 1");
  if (k1 < 0 || k2 < 0) throw DomainError("detected photon numbers must be >= 0");
  if (input.empty()) throw DomainError("mode-1 input is empty");

  HeraldOutcome out;
  out.k1 = k1;
  out.k2 = k2;
  const int cutoff = input.cutoff();
  const int jmax = cutoff + anc2 + anc3 - k1 - k2;
  if (jmax < 0) return out;

  std::vector<double> amps(static_cast<std::size_t>(jmax) + 1, 0.0);
  double probability = 0.0;
  for (int j = 0; j <= jmax; ++j) {
    const int m = j + k1 + k2 - anc2 - anc3;
    const int p = m + anc2 - k1;  // mode-1 photons between the splitters
    if (m < 0 || m > cutoff || p < 0 || input[m] == 0.0) continue;
    const double a = input[m] * bs_element(p, k1, m, anc2, bs) * bs_element(j, k2, p, anc3, bs);
    amps[static_cast<std::size_t>(j)] = a;
    probability += a * a;
  }
  if (!(probability > 0.0)) return out;

  Parity parity = Parity::mixed;
  if (input.parity() != Parity::mixed) {
    const int shift = (input.parity() == Parity::odd ? 1 : 0) + anc2 + anc3 + k1 + k2;
    parity = shift % 2 == 0 ? Parity::even : Parity::odd;
  }
  out.probability = probability;
  out.state = FockVector(std::move(amps), parity).normalized().sign_canonical();
  out.feasible = true;
  return out;
}

std::vector<HeraldOutcome> herald_distribution(const FockVector& input, int anc2, int anc3,
                                               const BeamSplitter& bs, int kmax, int threads) {
  if (kmax < 0) throw DomainError("kmax must be >= 0");
  const std::size_t side = static_cast<std::size_t>(kmax) + 1;
  std::vector<HeraldOutcome> table(side * side);
  parallel_for(table.size(), threads, [&](std::size_t i) {
    table[i] = cascade_herald(input, anc2, anc3, bs, static_cast<int>(i / side), static_cast<int>(i % side));
  });
  return table;
}

}  // namespace scsgen
