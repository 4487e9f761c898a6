#include "extk/germ.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "extk/root_find.hpp"

namespace extk {

namespace {

constexpr double kGenericFloor = 1e-12;   // p(K0) must exceed this
constexpr double kRootRelTol = 1e-9;      // |p(K0)| <= tol (1 + |K0|^3)
constexpr double kDerivFloor = 1e-9;      // simple-root guard on |p'(K0)|
constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) fail(error_code::invalid_argument, what);
}

}  // namespace

GermSpec make_einstein(double K0) {
  require_finite(K0, "K0 must be finite");
  return EinsteinGerm{K0};
}

GermSpec make_generic(const CubicParams& cubic, double K0) {
  require_finite(cubic.C, "C must be finite");
  require_finite(cubic.Cprime, "Cprime must be finite");
  require_finite(K0, "K0 must be finite");
  if (!(cubic.eval(K0) > kGenericFloor))
    fail(error_code::not_in_domain,
         "p(K0) <= 0: (C, C', K0) lies outside the generic moduli domain");
  return GenericGerm{cubic, K0};
}

GermSpec make_exceptional(const CubicParams& cubic, double K0, double lambda) {
  require_finite(cubic.C, "C must be finite");
  require_finite(cubic.Cprime, "Cprime must be finite");
  require_finite(K0, "K0 must be finite");
  require_finite(lambda, "lambda must be finite");
  const double pk = cubic.eval(K0);
  const double cube = std::abs(K0) * std::abs(K0) * std::abs(K0);
  if (std::abs(pk) > kRootRelTol * (1.0 + cube))
    fail(error_code::not_a_root, "K0 is not a root of the characteristic cubic");
  const double dp = cubic.deriv(K0);
  if (std::abs(dp) < kDerivFloor)
    fail(error_code::degenerate_root,
         "K0 is a multiple root of the characteristic cubic");
  if (!(lambda > 0.0))
    fail(error_code::non_positive_lambda, "lambda must be positive");
  return ExceptionalGerm{cubic, K0, lambda, 1.0 / dp};
}

GermEvaluator::GermEvaluator(GermSpec spec, EvaluatorConfig cfg)
    : spec_(std::move(spec)), cfg_(cfg) {
  std::visit(overloaded{[&](const EinsteinGerm& g) { init_einstein(g); },
                        [&](const GenericGerm& g) { init_generic(g); },
                        [&](const ExceptionalGerm& g) { init_exceptional(g); }},
             spec_);
}

void GermEvaluator::init_einstein(const EinsteinGerm& g) {
  kind_ = Kind::einstein;
  K0_ = g.K0;
  k_lo_ = k_hi_ = g.K0;
  radius_ = g.K0 >= 0.0 ? kInf : 1.0 / std::sqrt(-g.K0);
}

void GermEvaluator::init_generic(const GenericGerm& g) {
  kind_ = Kind::generic;
  cubic_ = g.cubic;
  K0_ = g.K0;

  // Maximal curvature interval: bounded by the nearest real roots of p.
  k_lo_ = -kInf;
  k_hi_ = kInf;
  for (double r : real_roots(cubic_)) {
    if (r > K0_) k_hi_ = std::min(k_hi_, r);
    if (r < K0_) k_lo_ = std::max(k_lo_, r);
  }
  const double d_up = std::isfinite(k_hi_) ? k_hi_ - K0_ : 1.0;
  const double d_dn = std::isfinite(k_lo_) ? K0_ - k_lo_ : 1.0;
  delta_ = 0.5 * std::min(d_up, d_dn);
  for (int i = 0; i < 64 && (cubic_.eval(K0_ - delta_) <= 0.0 ||
                             cubic_.eval(K0_ + delta_) <= 0.0);
       ++i)
    delta_ *= 0.5;

  const CubicParams p = cubic_;
  primitive_cache_.emplace([p](double s) { return 1.0 / p.eval(s); },
                           K0_ - delta_, K0_ + delta_, K0_, cfg_.quadrature);
  P_lo_ = (*primitive_cache_)(K0_ - delta_);
  P_hi_ = (*primitive_cache_)(K0_ + delta_);
  radius_ = 0.5 * std::min(-P_lo_, P_hi_);
}

void GermEvaluator::init_exceptional(const ExceptionalGerm& g) {
  kind_ = Kind::exceptional;
  cubic_ = g.cubic;
  K0_ = g.K0;
  lambda_ = g.lambda;
  sigma_ = g.sigma;
  sgn_ = sigma_ > 0.0 ? 1.0 : -1.0;
  dp0_ = cubic_.deriv(K0_);

  // Other roots of p sit at offsets tau solving tau^2/3 + K0 tau - p'(K0) = 0.
  double dist = 1.0;
  double t_pos = kInf, t_neg = -kInf;
  const double disc = 9.0 * K0_ * K0_ + 12.0 * dp0_;
  if (disc >= 0.0) {
    const double sq = std::sqrt(disc);
    const double taus[2] = {0.5 * (-3.0 * K0_ + sq), 0.5 * (-3.0 * K0_ - sq)};
    dist = std::min(std::abs(taus[0]), std::abs(taus[1]));
    if (!(dist > 0.0)) dist = 1.0;
    for (double tau : taus) {
      if (tau > 0.0) t_pos = std::min(t_pos, tau);
      if (tau < 0.0) t_neg = std::max(t_neg, tau);
    }
  }
  delta_ = 0.5 * dist;
  if (sgn_ > 0.0) {
    k_lo_ = K0_;
    k_hi_ = std::isfinite(t_pos) ? K0_ + t_pos : kInf;
  } else {
    k_hi_ = K0_;
    k_lo_ = std::isfinite(t_neg) ? K0_ + t_neg : -kInf;
  }

  // G(u) = int_0^{sgn u} (K0 + tau/3) / q(tau) dtau with
  // q(tau) = p'(K0) - K0 tau - tau^2/3, the closed form of the smooth part
  // 1/p(s) - sigma/(s - K0) after integration in s = K0 + tau.
  const double K0 = K0_;
  const double dp0 = dp0_;
  auto integrand = [K0, dp0](double tau) {
    const double q = dp0 - (K0 + tau / 3.0) * tau;
    return (K0 + tau / 3.0) / q;
  };
  const double lo = std::min(0.0, sgn_ * delta_);
  const double hi = std::max(0.0, sgn_ * delta_);
  radial_cache_.emplace(integrand, lo, hi, 0.0, cfg_.quadrature);
  G_delta_ = radial_log_correction(delta_);
  radius_ = 0.5 * std::sqrt(delta_ * std::exp(G_delta_) / lambda_);
  if (!std::isfinite(radius_) || !(radius_ > 0.0))
    fail(error_code::invalid_argument, "degenerate guaranteed radius");
}

void GermEvaluator::check_domain(std::complex<double> z) const {
  if (!(std::abs(z) < radius_))
    fail(error_code::out_of_domain, "|z| >= guaranteed domain radius");
}

double GermEvaluator::radial_log_correction(double u) const {
  if (u == 0.0) return 0.0;
  return (*radial_cache_)(sgn_ * u);
}

double GermEvaluator::solve_generic(double target) const {
  auto f = [this, target](double k) {
    return (*primitive_cache_)(k) - target;
  };
  RootFindConfig rc;
  rc.x_rel_tol = 4e-16;
  rc.max_iter = cfg_.max_root_iter;
  return solve_bracketed(f, K0_ - delta_, K0_ + delta_, P_lo_ - target,
                         P_hi_ - target, rc);
}

double GermEvaluator::solve_exceptional(double target) const {
  // H(u) = u exp(G(u)) is strictly increasing in u on [0, delta]:
  // d/du ln H = 1/(|sigma| p(K)) > 0 on the admissible side.
  auto f = [this, target](double u) {
    return u * std::exp(radial_log_correction(u)) - target;
  };
  const double fhi = delta_ * std::exp(G_delta_) - target;
  RootFindConfig rc;
  rc.x_rel_tol = 4e-16;
  rc.max_iter = cfg_.max_root_iter;
  return solve_bracketed(f, 0.0, delta_, -target, fhi, rc);
}

double GermEvaluator::curvature_at(std::complex<double> z) const {
  check_domain(z);
  switch (kind_) {
    case Kind::einstein:
      return K0_;
    case Kind::generic: {
      const double target = 2.0 * z.real();
      if (target == 0.0) return K0_;
      return solve_generic(target);
    }
    case Kind::exceptional: {
      const double r2 = std::norm(z);
      if (r2 == 0.0) return K0_;
      return K0_ + sgn_ * solve_exceptional(lambda_ * r2);
    }
  }
  return K0_;  // unreachable
}

double GermEvaluator::density_at(std::complex<double> z) const {
  return curvature_density_at(z).second;
}

std::pair<double, double> GermEvaluator::curvature_density_at(
    std::complex<double> z) const {
  check_domain(z);
  switch (kind_) {
    case Kind::einstein: {
      const double t = 1.0 + K0_ * std::norm(z);
      return {K0_, 4.0 / (t * t)};
    }
    case Kind::generic: {
      const double target = 2.0 * z.real();
      const double k = target == 0.0 ? K0_ : solve_generic(target);
      return {k, 4.0 * cubic_.eval(k)};
    }
    case Kind::exceptional: {
      const double r2 = std::norm(z);
      if (r2 == 0.0) return {K0_, 4.0 * std::abs(sigma_) * lambda_};
      const double u = solve_exceptional(lambda_ * r2);
      const double tau = sgn_ * u;
      // p with K0 pinned to an exact root: p(K0 + tau) = tau q(tau)
      const double q = dp0_ - (K0_ + tau / 3.0) * tau;
      const double density = 4.0 * sigma_ * sigma_ * (tau * q) / r2;
      return {K0_ + tau, density};
    }
  }
  return {K0_, 0.0};  // unreachable
}

double GermEvaluator::primitive(double t) const {
  if (kind_ != Kind::generic)
    fail(error_code::wrong_family, "primitive is defined for generic germs");
  if (!(t > k_lo_ && t < k_hi_))
    fail(error_code::out_of_interval,
         "t outside the maximal curvature interval");
  if (primitive_cache_->covers(t)) return (*primitive_cache_)(t);
  const CubicParams p = cubic_;
  return integrate([p](double s) { return 1.0 / p.eval(s); }, K0_, t,
                   cfg_.quadrature);
}

double domain_radius(const GermSpec& spec, EvaluatorConfig cfg) {
  return GermEvaluator(spec, cfg).domain_radius();
}

}  // namespace extk
