#include <array>
#include <cmath>

#include "doctest.h"
#include "scsgen/nelder_mead.hpp"

using scsgen::nelder_mead_minimize;

TEST_CASE("simplex finds a shifted quadratic minimum") {
  const auto f = [](const std::array<double, 2>& x) {
    return (x[0] - 1.5) * (x[0] - 1.5) + 3.0 * (x[1] + 0.25) * (x[1] + 0.25);
  };
  const auto r = nelder_mead_minimize<2>(f, {0.0, 0.0}, {0.5, 0.5}, {1e-8, 1e-8}, 2000);
  CHECK(r.converged);
  CHECK(r.x[0] == doctest::Approx(1.5).epsilon(1e-6));
  CHECK(r.x[1] == doctest::Approx(-0.25).epsilon(1e-6));
  CHECK(r.value < 1e-12);
}

TEST_CASE("simplex on the Rosenbrock valley") {
  const auto f = [](const std::array<double, 2>& x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  const auto r = nelder_mead_minimize<2>(f, {-1.2, 1.0}, {0.1, 0.1}, {1e-9, 1e-9}, 5000);
  CHECK(r.converged);
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(r.x[1] == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("simplex reports an exhausted budget") {
  int calls = 0;
  const auto f = [&](const std::array<double, 2>& x) {
    ++calls;
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  const auto r = nelder_mead_minimize<2>(f, {-1.2, 1.0}, {0.1, 0.1}, {1e-12, 1e-12}, 40);
  CHECK_FALSE(r.converged);
  CHECK(r.evaluations == calls);
  CHECK(r.evaluations < 45);
  CHECK(r.value <= f({-1.2, 1.0}));
}

TEST_CASE("simplex in one dimension") {
  const auto r = nelder_mead_minimize<1>([](const std::array<double, 1>& x) { return std::cosh(x[0] - 0.3); }, {2.0},
                                         {0.4}, {1e-10}, 500);
  CHECK(r.converged);
  CHECK(r.x[0] == doctest::Approx(0.3).epsilon(1e-8));
}
