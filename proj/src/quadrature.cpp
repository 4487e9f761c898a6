#include "extk/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace extk {

namespace {

double simpson(double a, double fa, double fm, double b, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

}  // namespace

CachedAntiderivative::CachedAntiderivative(std::function<double(double)> f,
                                           double a, double b, double x0,
                                           QuadratureConfig cfg)
    : f_(std::move(f)) {
  if (!(b > a)) fail(error_code::invalid_argument, "empty antiderivative range");
  xs_.push_back(a);
  const double fa = f_(a);
  const double fb = f_(b);
  const double m = 0.5 * (a + b);
  const double fm = f_(m);
  const double whole = simpson(a, fa, fm, b, fb);
  subdivide(a, fa, b, fb, m, fm, whole, cfg.abs_tol, 0, cfg.max_depth);

  prefix_.resize(xs_.size());
  prefix_[0] = 0.0;
  // Panel integrals use the plain Simpson rule, the same rule partial
  // evaluations use, so F is continuous across panel seams.
  for (std::size_t i = 1; i < xs_.size(); ++i) {
    const double lo = xs_[i - 1], hi = xs_[i];
    const double mid = 0.5 * (lo + hi);
    prefix_[i] =
        prefix_[i - 1] + simpson(lo, f_(lo), f_(mid), hi, f_(hi));
  }
  if (!(x0 >= a && x0 <= b))
    fail(error_code::invalid_argument, "base point outside cached range");
  base_ = 0.0;
  base_ = (*this)(x0);
}

void CachedAntiderivative::subdivide(double a, double fa, double b, double fb,
                                     double m, double fm, double whole,
                                     double tol, int depth, int max_depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f_(lm);
  const double frm = f_(rm);
  const double left = simpson(a, fa, flm, m, fm);
  const double right = simpson(m, fm, frm, b, fb);
  const double delta = left + right - whole;
  if (!std::isfinite(delta))
    fail(error_code::quadrature_failure, "non-finite integrand");
  if (std::abs(delta) <= 15.0 * tol) {
    // accept the two children as frozen panels
    xs_.push_back(m);
    xs_.push_back(b);
    return;
  }
  if (depth >= max_depth)
    fail(error_code::quadrature_failure, "subdivision cap exceeded");
  subdivide(a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1, max_depth);
  subdivide(m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1, max_depth);
}

double CachedAntiderivative::operator()(double x) const {
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - xs_.begin());
  if (i == 0) i = 1;                      // x == front
  if (i >= xs_.size()) i = xs_.size() - 1;  // x == back
  const double lo = xs_[i - 1];
  const double mid = 0.5 * (lo + x);
  const double partial = simpson(lo, f_(lo), f_(mid), x, f_(x));
  return prefix_[i - 1] + partial - base_;
}

}  // namespace extk
