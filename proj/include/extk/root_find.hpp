#pragma once

#include <cmath>

#include "extk/errors.hpp"

namespace extk {

struct RootFindConfig {
  double x_abs_tol = 0.0;
  double x_rel_tol = 4e-16;
  int max_iter = 200;
};

/// Root of f on a bracket [lo, hi] with f(lo), f(hi) of opposite sign.
/// Secant steps accelerate convergence; every other step bisects so the
/// bracket width provably halves regardless of the function's shape.
template <class F>
double solve_bracketed(F&& f, double lo, double hi, double flo, double fhi,
                       RootFindConfig cfg = {}) {
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    fail(error_code::root_find_failure, "bracket endpoints have equal sign");
  for (int it = 0; it < cfg.max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double width = hi - lo;
    if (width <= cfg.x_abs_tol + cfg.x_rel_tol * std::abs(mid)) return mid;
    double x;
    if (it % 2 == 0) {
      x = lo - flo * (hi - lo) / (fhi - flo);  // secant through the bracket
      if (!(x > lo && x < hi)) x = mid;
    } else {
      x = mid;
    }
    if (x == lo || x == hi) return mid;  // bracket is at float resolution
    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx > 0.0) == (fhi > 0.0)) {
      hi = x;
      fhi = fx;
    } else {
      lo = x;
      flo = fx;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace extk
