#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "extk/errors.hpp"

namespace extk {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  int max_depth = 40;  // subdivision cap; exceeding it reports an error
};

namespace detail {

template <class F>
double adaptive_simpson_rec(F&& f, double a, double fa, double b, double fb,
                            double m, double fm, double whole, double tol,
                            int depth, int max_depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (!std::isfinite(delta))
    fail(error_code::quadrature_failure, "non-finite integrand");
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth >= max_depth)
    fail(error_code::quadrature_failure, "subdivision cap exceeded");
  return adaptive_simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol,
                              depth + 1, max_depth) +
         adaptive_simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol,
                              depth + 1, max_depth);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] (signed: a > b allowed)
/// to the configured absolute tolerance.
template <class F>
double integrate(F&& f, double a, double b, QuadratureConfig cfg = {}) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adaptive_simpson_rec(f, a, fa, b, fb, m, fm, whole,
                                      cfg.abs_tol, 0, cfg.max_depth);
}

/// Antiderivative F(x) = \int_{x0}^{x} f over a fixed interval.
///
/// The panel decomposition is produced once by adaptive Simpson refinement
/// and then frozen, so repeated evaluations are cheap and F varies smoothly
/// in x (a fresh adaptive pass per evaluation would make the quadrature
/// error jump between nearby arguments, which finite-difference consumers
/// would amplify by 1/h^2).
class CachedAntiderivative {
 public:
  CachedAntiderivative() = default;

  CachedAntiderivative(std::function<double(double)> f, double a, double b,
                       double x0, QuadratureConfig cfg = {});

  double operator()(double x) const;

  double lo() const { return xs_.front(); }
  double hi() const { return xs_.back(); }
  bool covers(double x) const {
    return !xs_.empty() && x >= xs_.front() && x <= xs_.back();
  }

 private:
  void subdivide(double a, double fa, double b, double fb, double m, double fm,
                 double whole, double tol, int depth, int max_depth);

  std::function<double(double)> f_;
  std::vector<double> xs_;      // panel boundaries, ascending
  std::vector<double> prefix_;  // prefix_[i] = \int_{xs_[0]}^{xs_[i]}
  double base_ = 0.0;           // \int_{xs_[0]}^{x0}
};

}  // namespace extk
