#include "extk/numcheck.hpp"

#include <atomic>
#include <cmath>
#include <numbers>

namespace extk {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

template <class F>
std::pair<complexd, complexd> wirtinger_impl(F&& f, complexd z, double h) {
  const complexd fx = (f(z + h) - f(z - h)) / (2.0 * h);
  const complexd fy = (f(z + kI * h) - f(z - kI * h)) / (2.0 * h);
  return {0.5 * (fx - kI * fy), 0.5 * (fx + kI * fy)};
}

template <class Den>
double curvature_fd_impl(Den&& density, complexd z, double h) {
  const double d0 = density(z);
  const double dpx = density(z + h);
  const double dmx = density(z - h);
  const double dpy = density(z + kI * h);
  const double dmy = density(z - kI * h);
  for (double d : {d0, dpx, dmx, dpy, dmy})
    if (!(d > 0.0) || !std::isfinite(d))
      fail(error_code::non_positive_density,
           "density must be positive on the stencil");
  const double p0 = 0.5 * std::log(d0);
  const double lap = (0.5 * std::log(dpx) + 0.5 * std::log(dmx) +
                      0.5 * std::log(dpy) + 0.5 * std::log(dmy) - 4.0 * p0) /
                     (h * h);
  return -lap / d0;
}

template <class Den, class Curv>
complexd gradient_field_impl(Den&& density, Curv&& curvature, complexd z,
                             double h) {
  const double d0 = density(z);
  if (!(d0 > 0.0) || !std::isfinite(d0))
    fail(error_code::non_positive_density, "density must be positive");
  auto kc = [&](complexd w) { return complexd(curvature(w), 0.0); };
  const auto [dz, dzb] = wirtinger_impl(kc, z, h);
  (void)dz;
  return 4.0 * dzb / d0;
}

struct PointResiduals {
  double curvature = 0.0;
  double holomorphy = 0.0;
  double model = 0.0;
};

template <class Den, class Curv, class Model>
PointResiduals residuals_at(Den&& density, Curv&& curvature, Model&& model,
                            complexd z, double h) {
  PointResiduals r;
  const double k_eval = curvature(z);
  const double k_fd = curvature_fd_impl(density, z, h);
  r.curvature = std::abs(k_fd - k_eval);

  const complexd f = gradient_field_impl(density, curvature, z, h);
  auto field = [&](complexd w) {
    return gradient_field_impl(density, curvature, w, h);
  };
  r.holomorphy = std::abs(wirtinger_impl(field, z, h).second);

  const complexd m = model(z);
  r.model = std::abs(f - m) / std::max(1.0, std::abs(m));
  return r;
}

complexd spiral_point(int k, int n, double radius) {
  static const double golden_angle =
      std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double r = radius * std::sqrt((k + 0.5) / n);
  const double a = golden_angle * k;
  return {r * std::cos(a), r * std::sin(a)};
}

template <class Den, class Curv, class Model>
VerificationReport verify_impl(Den&& density, Curv&& curvature, Model&& model,
                               double grid_radius, const VerifyOptions& opts) {
  if (!(grid_radius > 0.0) || !std::isfinite(grid_radius))
    fail(error_code::invalid_argument, "grid radius must be positive");
  if (opts.n_points < 8)
    fail(error_code::invalid_argument, "need at least 8 grid points");
  const double h = opts.h > 0.0 ? opts.h : 1e-3 * grid_radius;
  const int n = opts.n_points;

  double cmax = 0.0, hmax = 0.0, mmax = 0.0;
  std::atomic<int> err{-1};

  auto run_point = [&](int k, double& c, double& hl, double& m) {
    const PointResiduals r =
        residuals_at(density, curvature, model, spiral_point(k, n, grid_radius), h);
    c = r.curvature;
    hl = r.holomorphy;
    m = r.model;
  };
  auto guarded = [&](int k, double& c, double& hl, double& m) {
    try {
      run_point(k, c, hl, m);
    } catch (const DomainError& e) {
      int expected = -1;
      err.compare_exchange_strong(expected, static_cast<int>(e.code()));
    } catch (...) {
      int expected = -1;
      err.compare_exchange_strong(
          expected, static_cast<int>(error_code::invalid_argument));
    }
  };

  if (opts.parallel) {
#pragma omp parallel for schedule(dynamic) reduction(max : cmax, hmax, mmax)
    for (int k = 0; k < n; ++k) {
      double c = 0.0, hl = 0.0, m = 0.0;
      guarded(k, c, hl, m);
      cmax = std::max(cmax, c);
      hmax = std::max(hmax, hl);
      mmax = std::max(mmax, m);
    }
  } else {
    for (int k = 0; k < n; ++k) {
      double c = 0.0, hl = 0.0, m = 0.0;
      guarded(k, c, hl, m);
      cmax = std::max(cmax, c);
      hmax = std::max(hmax, hl);
      mmax = std::max(mmax, m);
    }
  }
  if (err.load() >= 0)
    throw DomainError(static_cast<error_code>(err.load()),
                      "field evaluation failed on the verification grid");

  VerificationReport report;
  report.grid = {grid_radius, n};
  report.max_curvature_residual = cmax;
  report.max_holomorphy_residual = hmax;
  report.max_model_residual = mmax;
  report.step_h = h;
  report.pass = cmax < opts.tol.curvature && hmax < opts.tol.holomorphy &&
                mmax < opts.tol.model;
  return report;
}

}  // namespace

std::pair<complexd, complexd> wirtinger(const ComplexField& f, complexd z,
                                        double h) {
  return wirtinger_impl(f, z, h);
}

double curvature_from_density(const RealField& density, complexd z, double h) {
  return curvature_fd_impl(density, z, h);
}

complexd gradient_field(const RealField& density, const RealField& curvature,
                        complexd z, double h) {
  return gradient_field_impl(density, curvature, z, h);
}

VerificationReport verify_fields(const RealField& density,
                                 const RealField& curvature,
                                 const ComplexField& model, double grid_radius,
                                 const VerifyOptions& opts) {
  return verify_impl(density, curvature, model, grid_radius, opts);
}

ComplexField model_gradient_field(const GermSpec& spec) {
  if (std::holds_alternative<EinsteinGerm>(spec))
    return [](complexd) { return complexd(0.0, 0.0); };
  if (std::holds_alternative<GenericGerm>(spec))
    return [](complexd) { return complexd(1.0, 0.0); };
  const double sigma = std::get<ExceptionalGerm>(spec).sigma;
  return [sigma](complexd z) { return z / sigma; };
}

VerificationReport verify(const GermSpec& spec, double grid_radius,
                          const VerifyOptions& opts) {
  const GermEvaluator ev(spec, opts.eval);
  const double h = opts.h > 0.0 ? opts.h : 1e-3 * grid_radius;
  // the holomorphy stencil reaches 2h beyond the outermost sample
  if (!(grid_radius + 2.5 * h < ev.domain_radius()))
    fail(error_code::grid_exceeds_domain,
         "verification grid does not fit inside the guaranteed disk");
  auto density = [&ev](complexd z) { return ev.density_at(z); };
  auto curvature = [&ev](complexd z) { return ev.curvature_at(z); };
  return verify_impl(density, curvature, model_gradient_field(spec),
                     grid_radius, opts);
}

}  // namespace extk
