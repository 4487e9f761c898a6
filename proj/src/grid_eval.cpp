#include "extk/grid_eval.hpp"

#include <atomic>
#include <cmath>

namespace extk {

namespace {

GridResult make_layout(double radius, int n) {
  if (n < 1) fail(error_code::invalid_argument, "grid n must be >= 1");
  if (!(radius > 0.0) || !std::isfinite(radius))
    fail(error_code::invalid_argument, "grid radius must be positive finite");
  GridResult g;
  g.n = n;
  g.half_side = radius / std::sqrt(2.0);
  const std::size_t total = static_cast<std::size_t>(n) * n;
  g.re.resize(total);
  g.im.resize(total);
  g.K.resize(total);
  g.density.resize(total);
  return g;
}

double coord(double half_side, int i, int n) {
  if (n == 1) return 0.0;
  return -half_side + 2.0 * half_side * i / (n - 1);
}

void fill_point(const GermEvaluator& eval, GridResult& g, int idx) {
  const int n = g.n;
  const int j = idx / n;  // im index (outer)
  const int i = idx % n;  // re index (inner)
  const double re = coord(g.half_side, i, n);
  const double im = coord(g.half_side, j, n);
  const auto [k, den] = eval.curvature_density_at({re, im});
  g.re[idx] = re;
  g.im[idx] = im;
  g.K[idx] = k;
  g.density[idx] = den;
}

}  // namespace

GridResult evaluate_square_grid_serial(const GermEvaluator& eval,
                                       double radius, int n) {
  if (!(radius < eval.domain_radius()))
    fail(error_code::grid_exceeds_domain,
         "grid circumradius must stay inside the guaranteed disk");
  GridResult g = make_layout(radius, n);
  const int total = n * n;
  for (int idx = 0; idx < total; ++idx) fill_point(eval, g, idx);
  return g;
}

GridResult evaluate_square_grid(const GermEvaluator& eval, double radius,
                                int n, bool parallel) {
  if (!parallel) return evaluate_square_grid_serial(eval, radius, n);
  if (!(radius < eval.domain_radius()))
    fail(error_code::grid_exceeds_domain,
         "grid circumradius must stay inside the guaranteed disk");
  GridResult g = make_layout(radius, n);
  const int total = n * n;
  std::atomic<int> err{-1};
#pragma omp parallel for schedule(dynamic, 16)
  for (int idx = 0; idx < total; ++idx) {
    try {
      fill_point(eval, g, idx);
    } catch (const DomainError& e) {
      int expected = -1;
      err.compare_exchange_strong(expected, static_cast<int>(e.code()));
    } catch (...) {
      int expected = -1;
      err.compare_exchange_strong(
          expected, static_cast<int>(error_code::invalid_argument));
    }
  }
  if (err.load() >= 0)
    throw DomainError(static_cast<error_code>(err.load()),
                      "grid evaluation failed");
  return g;
}

}  // namespace extk
