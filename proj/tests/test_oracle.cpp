#include <cmath>
#include <vector>

#include "doctest.h"
#include "scsgen/errors.hpp"
#include "scsgen/oracle.hpp"
#include "scsgen/states.hpp"

using namespace scsgen;

namespace {

// Three-mode creation-operator polynomial, dense in each exponent up to `deg`.
struct Poly3 {
  int deg;
  std::vector<double> c;
  explicit Poly3(int d) : deg(d), c((d + 1) * (d + 1) * (d + 1), 0.0) {}
  double& at(int i, int j, int k) { return c[(i * (deg + 1) + j) * (deg + 1) + k]; }
  double at(int i, int j, int k) const { return c[(i * (deg + 1) + j) * (deg + 1) + k]; }
};

// Multiplies p by the linear form (u x + v y + w z).
Poly3 times_linear(const Poly3& p, double u, double v, double w) {
  Poly3 out(p.deg);
  for (int i = 0; i <= p.deg; ++i) {
    for (int j = 0; i + j <= p.deg; ++j) {
      for (int k = 0; i + j + k <= p.deg; ++k) {
        const double a = p.at(i, j, k);
        if (a == 0.0) continue;
        if (i + j + k + 1 > p.deg) throw std::logic_error("polynomial degree overflow");
        out.at(i + 1, j, k) += u * a;
        out.at(i, j + 1, k) += v * a;
        out.at(i, j, k + 1) += w * a;
      }
    }
  }
  return out;
}

// Brute-force projection of U13 U12 (input ⊗ |a2, a3>) onto modes 2, 3 = (k1, k2),
// obtained by substituting the transformed creation operators into the input polynomial.
std::vector<double> brute_force_projection(const FockVector& input, int a2, int a3, const BeamSplitter& bs, int k1,
                                           int k2) {
  const double t = bs.t, r = bs.r;
  // Images of a1+, a2+, a3+ as (x, y, z) coefficients.
  const double X[3] = {t * t, -r, -t * r};
  const double Y[3] = {r * t, t, -r * r};
  const double Z[3] = {r, 0.0, t};
  const int deg = input.cutoff() + a2 + a3;
  std::vector<double> out(deg + 1, 0.0);
  for (int m = 0; m <= input.cutoff(); ++m) {
    if (input[m] == 0.0) continue;
    Poly3 p(deg);
    p.at(0, 0, 0) = input[m] / std::sqrt(std::tgamma(m + 1.0) * std::tgamma(a2 + 1.0) * std::tgamma(a3 + 1.0));
    for (int i = 0; i < m; ++i) p = times_linear(p, X[0], X[1], X[2]);
    for (int i = 0; i < a2; ++i) p = times_linear(p, Y[0], Y[1], Y[2]);
    for (int i = 0; i < a3; ++i) p = times_linear(p, Z[0], Z[1], Z[2]);
    for (int j = 0; j + k1 + k2 <= deg; ++j) {
      out[j] += p.at(j, k1, k2) * std::sqrt(std::tgamma(j + 1.0) * std::tgamma(k1 + 1.0) * std::tgamma(k2 + 1.0));
    }
  }
  return out;
}

double sum_sq(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

}  // namespace

TEST_CASE("beam splitter parameters") {
  const BeamSplitter b = BeamSplitter::from_ratio(1.0);
  CHECK(b.T == doctest::Approx(0.5));
  CHECK(b.R == doctest::Approx(0.5));
  for (double B : {0.01, 0.3, 2.0, 7.5}) {
    const BeamSplitter s = BeamSplitter::from_ratio(B);
    CHECK(s.t * s.t + s.r * s.r == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.R / s.T == doctest::Approx(B).epsilon(1e-14));
    CHECK(s.T == doctest::Approx(1.0 / (1.0 + B)).epsilon(1e-15));
  }
  CHECK_THROWS_AS(BeamSplitter::from_ratio(0.0), DomainError);
  CHECK_THROWS_AS(BeamSplitter::from_ratio(-1.0), DomainError);
}

TEST_CASE("cascade squeezing parameters") {
  const CascadeParams c = CascadeParams::make(squeeze_from(SqueezeAnchor::parameter, 0.3), BeamSplitter::from_ratio(0.5));
  CHECK(c.y1 == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(c.y2 == doctest::Approx(0.3 / 2.25).epsilon(1e-15));
  CHECK(c.y2 <= c.y1);
}

TEST_CASE("one-photon transform") {
  const BeamSplitter b = BeamSplitter::from_ratio(0.7);
  CHECK(bs_element(1, 0, 1, 0, b) == doctest::Approx(b.t).epsilon(1e-15));
  CHECK(bs_element(0, 1, 1, 0, b) == doctest::Approx(-b.r).epsilon(1e-15));
  CHECK(bs_element(1, 0, 0, 1, b) == doctest::Approx(b.r).epsilon(1e-15));
  CHECK(bs_element(0, 1, 0, 1, b) == doctest::Approx(b.t).epsilon(1e-15));
  CHECK(bs_element(2, 0, 1, 0, b) == 0.0);
  const std::vector<double> col = bs_apply(1, 0, b);
  REQUIRE(col.size() == 2);
  CHECK(col[1] == doctest::Approx(b.t));
  CHECK(col[0] == doctest::Approx(-b.r));
}

TEST_CASE("two-photon transform") {
  // |1,1> -> (t a1 - r a2)(r a1 + t a2)|0> = tr a1^2 + (t^2 - r^2) a1 a2 - rt a2^2.
  const BeamSplitter b = BeamSplitter::from_ratio(2.0);
  const double s2 = std::sqrt(2.0);
  CHECK(bs_element(2, 0, 1, 1, b) == doctest::Approx(b.t * b.r * s2).epsilon(1e-14));
  CHECK(bs_element(1, 1, 1, 1, b) == doctest::Approx(b.T - b.R).epsilon(1e-14));
  CHECK(bs_element(0, 2, 1, 1, b) == doctest::Approx(-b.t * b.r * s2).epsilon(1e-14));
}

TEST_CASE("beam splitter blocks are orthogonal") {
  for (double B : {0.05, 1.0, 4.0}) {
    const BeamSplitter b = BeamSplitter::from_ratio(B);
    for (int N = 0; N <= 14; ++N) {
      for (int m1 = 0; m1 <= N; ++m1) {
        for (int m2 = m1; m2 <= N; ++m2) {
          double dot = 0.0;
          for (int p = 0; p <= N; ++p) dot += bs_element(p, N - p, m1, N - m1, b) * bs_element(p, N - p, m2, N - m2, b);
          CHECK(std::abs(dot - (m1 == m2 ? 1.0 : 0.0)) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("cascade matches brute-force operator substitution") {
  const SqueezeParams sq = squeeze_from(SqueezeAnchor::parameter, 0.25);
  const FockVector input = smsv_state(sq, CutoffPolicy::at(16, 1e-3));
  for (double B : {0.4, 1.0, 2.5}) {
    const BeamSplitter bs = BeamSplitter::from_ratio(B);
    for (int anc : {0, 1}) {
      for (int k1 = 0; k1 <= 3; ++k1) {
        for (int k2 = 0; k2 <= 3; ++k2) {
          CAPTURE(B);
          CAPTURE(anc);
          CAPTURE(k1);
          CAPTURE(k2);
          const std::vector<double> ref = brute_force_projection(input, anc, anc, bs, k1, k2);
          const HeraldOutcome o = cascade_herald(input, anc, anc, bs, k1, k2);
          const double p_ref = sum_sq(ref);
          CHECK(o.probability == doctest::Approx(p_ref).epsilon(1e-12));
          if (p_ref == 0.0) {
            CHECK_FALSE(o.feasible);
            continue;
          }
          const FockVector ref_state = FockVector(ref).normalized().sign_canonical();
          for (int j = 0; j <= std::max(ref_state.cutoff(), o.state.cutoff()); ++j) {
            CHECK(std::abs(o.state[j] - ref_state[j]) < 1e-12);
          }
        }
      }
    }
  }
}

TEST_CASE("vacuum input with two ancilla photons") {
  const FockVector vacuum(std::vector<double>{1.0});
  for (double B : {0.5, 1.0, 3.0}) {
    const HeraldOutcome o = cascade_herald(vacuum, 1, 1, BeamSplitter::from_ratio(B), 0, 0);
    CHECK(o.probability == doctest::Approx(2.0 * B * B / std::pow(1.0 + B, 3)).epsilon(1e-13));
    CHECK(o.state[2] == doctest::Approx(1.0));
    CHECK(o.state.parity() == Parity::even);
  }
  CHECK(cascade_herald(vacuum, 1, 1, BeamSplitter::from_ratio(1.0), 0, 0).probability ==
        doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("nearly transparent splitters pass ancillas through") {
  const FockVector input = smsv_state(squeeze_from(SqueezeAnchor::parameter, 0.2));
  const HeraldOutcome o = cascade_herald(input, 1, 1, BeamSplitter::from_ratio(1e-9), 1, 1);
  CHECK(o.probability == doctest::Approx(1.0).epsilon(1e-7));
  for (int j = 0; j <= input.cutoff(); ++j) CHECK(std::abs(o.state[j] - input[j]) < 1e-7);
}

TEST_CASE("unreachable outcomes have zero probability") {
  const FockVector vacuum(std::vector<double>{1.0});
  const HeraldOutcome o = cascade_herald(vacuum, 1, 1, BeamSplitter::from_ratio(1.0), 2, 1);
  CHECK_FALSE(o.feasible);
  CHECK(o.probability == 0.0);
  CHECK(o.state.empty());
}

TEST_CASE("ancilla photon numbers are restricted") {
  const FockVector vacuum(std::vector<double>{1.0});
  CHECK_THROWS_AS(cascade_herald(vacuum, 2, 1, BeamSplitter::from_ratio(1.0), 0, 0), DomainError);
  CHECK_THROWS_AS(cascade_herald(vacuum, 1, -1, BeamSplitter::from_ratio(1.0), 0, 0), DomainError);
  CHECK_THROWS_AS(cascade_herald(vacuum, 1, 1, BeamSplitter::from_ratio(1.0), -1, 0), DomainError);
}

TEST_CASE("vacuum in, vacuum out") {
  const FockVector vacuum = smsv_state(squeeze_from(SqueezeAnchor::amplitude, 0.0));
  const auto rows = herald_distribution(vacuum, 0, 0, BeamSplitter::from_ratio(0.8), 3);
  REQUIRE(rows.size() == 16);
  CHECK(rows[0].probability == doctest::Approx(1.0));
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].probability == 0.0);
}

TEST_CASE("outcome parity follows the detected photon number") {
  const FockVector input = smsv_state(squeeze_from(SqueezeAnchor::parameter, 0.3));
  const auto rows = herald_distribution(input, 1, 1, BeamSplitter::from_ratio(0.6), 6);
  for (const HeraldOutcome& o : rows) {
    REQUIRE(o.feasible);
    CHECK(o.state.parity() == ((o.k1 + o.k2) % 2 == 0 ? Parity::even : Parity::odd));
  }
}

TEST_CASE("measurement completeness grows to one") {
  const FockVector input = smsv_state(squeeze_from(SqueezeAnchor::parameter, 0.2));
  const BeamSplitter bs = BeamSplitter::from_ratio(1.0);
  double previous = 0.0;
  for (int kmax : {2, 6, 12, input.cutoff() + 2}) {
    double total = 0.0;
    for (const auto& o : herald_distribution(input, 1, 1, bs, kmax)) total += o.probability;
    CHECK(total > previous);
    previous = total;
  }
  CHECK(std::abs(previous - 1.0) < 1e-8);
}

TEST_CASE("distribution agrees with pointwise heralding and is thread independent") {
  const FockVector input = smsv_state(squeeze_from(SqueezeAnchor::parameter, 0.2));
  const BeamSplitter bs = BeamSplitter::from_ratio(0.5);
  const auto serial = herald_distribution(input, 1, 1, bs, 5, 1);
  for (int threads : {2, 4, 8}) {
    const auto parallel = herald_distribution(input, 1, 1, bs, 5, threads);
    REQUIRE(parallel.size() == serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(parallel[i].probability == serial[i].probability);
      CHECK(parallel[i].k1 == serial[i].k1);
      CHECK(parallel[i].k2 == serial[i].k2);
    }
  }
  for (const auto& o : serial) {
    CHECK(o.probability == cascade_herald(input, 1, 1, bs, o.k1, o.k2).probability);
  }
}

TEST_CASE("vacuum-ancilla states depend only on the twice-reduced squeezing") {
  const double y2 = 0.08;
  for (double B : {0.2, 0.9}) {
    const double B_other = B + 0.35;
    const double y = y2 * (1 + B) * (1 + B);
    const double y_other = y2 * (1 + B_other) * (1 + B_other);
    const FockVector in = smsv_state(squeeze_from(SqueezeAnchor::parameter, y));
    const FockVector in_other = smsv_state(squeeze_from(SqueezeAnchor::parameter, y_other));
    for (auto [k1, k2] : {std::pair{1, 1}, std::pair{2, 3}, std::pair{4, 4}}) {
      const HeraldOutcome a = cascade_herald(in, 0, 0, BeamSplitter::from_ratio(B), k1, k2);
      const HeraldOutcome b = cascade_herald(in_other, 0, 0, BeamSplitter::from_ratio(B_other), k1, k2);
      for (int j = 0; j <= std::max(a.state.cutoff(), b.state.cutoff()); ++j) {
        CHECK(std::abs(a.state[j] - b.state[j]) < 1e-9);
      }
    }
  }
}
