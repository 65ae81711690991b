#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>

namespace scsgen {

template <std::size_t N>
struct SimplexResult {
  std::array<double, N> x{};
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Downhill simplex minimization with the standard reflection/expansion/contraction/shrink
// coefficients (1, 2, 1/2, 1/2). Stops when every coordinate's spread over the simplex is
// below `tolerance` (converged) or after `max_evaluations` objective calls (not converged).
template <std::size_t N, class Objective>
SimplexResult<N> nelder_mead_minimize(Objective&& f, const std::array<double, N>& start,
                                      const std::array<double, N>& step,
                                      const std::array<double, N>& tolerance, int max_evaluations) {
  using Point = std::array<double, N>;
  std::array<Point, N + 1> pts;
  std::array<double, N + 1> vals;
  int evals = 0;
  const auto eval = [&](const Point& p) {
    ++evals;
    return f(p);
  };

  pts[0] = start;
  vals[0] = eval(start);
  for (std::size_t i = 0; i < N; ++i) {
    pts[i + 1] = start;
    pts[i + 1][i] += step[i];
    vals[i + 1] = eval(pts[i + 1]);
  }

  std::array<std::size_t, N + 1> order;
  const auto sort = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
  };
  const auto small_enough = [&] {
    for (std::size_t d = 0; d < N; ++d) {
      double lo = pts[0][d], hi = pts[0][d];
      for (const Point& p : pts) {
        lo = std::min(lo, p[d]);
        hi = std::max(hi, p[d]);
      }
      if (hi - lo >= tolerance[d]) return false;
    }
    return true;
  };
  const auto along = [](const Point& from, const Point& to, double coef) {
    Point out;
    for (std::size_t d = 0; d < N; ++d) out[d] = from[d] + coef * (to[d] - from[d]);
    return out;
  };

  bool converged = false;
  while (true) {
    sort();
    if (small_enough()) {
      converged = true;
      break;
    }
    if (evals >= max_evaluations) break;

    const std::size_t best = order[0];
    const std::size_t worst = order[N];
    const std::size_t second = order[N - 1];
    Point centroid{};
    for (std::size_t k = 0; k < N; ++k) {
      for (std::size_t d = 0; d < N; ++d) centroid[d] += pts[order[k]][d] / static_cast<double>(N);
    }

    const Point reflected = along(centroid, pts[worst], -1.0);
    const double f_ref = eval(reflected);
    if (f_ref < vals[best]) {
      const Point expanded = along(centroid, pts[worst], -2.0);
      const double f_exp = eval(expanded);
      if (f_exp < f_ref) {
        pts[worst] = expanded;
        vals[worst] = f_exp;
      } else {
        pts[worst] = reflected;
        vals[worst] = f_ref;
      }
      continue;
    }
    if (f_ref < vals[second]) {
      pts[worst] = reflected;
      vals[worst] = f_ref;
      continue;
    }
    const bool outside = f_ref < vals[worst];
    const Point contracted = outside ? along(centroid, reflected, 0.5) : along(centroid, pts[worst], 0.5);
    const double f_con = eval(contracted);
    if (f_con < (outside ? f_ref : vals[worst])) {
      pts[worst] = contracted;
      vals[worst] = f_con;
      continue;
    }
    for (std::size_t k = 1; k <= N; ++k) {
      const std::size_t i = order[k];
      pts[i] = along(pts[best], pts[i], 0.5);
      vals[i] = eval(pts[i]);
    }
  }

  sort();
  SimplexResult<N> result;
  result.x = pts[order[0]];
  result.value = vals[order[0]];
  result.evaluations = evals;
  result.converged = converged;
  return result;
}

}  // namespace scsgen
