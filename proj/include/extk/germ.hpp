#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <variant>

#include "extk/cubic.hpp"
#include "extk/errors.hpp"
#include "extk/quadrature.hpp"

namespace extk {

/// Constant-curvature germ, density 4/(1 + K0 |z|^2)^2.
struct EinsteinGerm {
  double K0;
};

/// Translational family: the curvature solves P(K) = z + zbar where P is
/// the primitive of 1/p based at K0, and the density is 4 p(K).
/// Valid iff p(K0) > 0.
struct GenericGerm {
  CubicParams cubic;
  double K0;
};

/// Radial family: K0 is a simple root of p, sigma = 1/p'(K0) is the residue
/// of 1/p at K0, and lambda > 0 is the remaining modulus, recovered as the
/// limit of sgn(sigma) (K - K0)/|z|^2 at 0.
struct ExceptionalGerm {
  CubicParams cubic;
  double K0;
  double lambda;
  double sigma;  // derived: 1/p'(K0); never accepted as input
};

using GermSpec = std::variant<EinsteinGerm, GenericGerm, ExceptionalGerm>;

GermSpec make_einstein(double K0);

/// Errors with not_in_domain when p(K0) <= 1e-12.
GermSpec make_generic(const CubicParams& cubic, double K0);

/// Errors: not_a_root if |p(K0)| > 1e-9 (1 + |K0|^3); degenerate_root if
/// |p'(K0)| < 1e-9; non_positive_lambda if lambda <= 0.
GermSpec make_exceptional(const CubicParams& cubic, double K0, double lambda);

struct EvaluatorConfig {
  QuadratureConfig quadrature{};
  int max_root_iter = 200;
};

/// Evaluation context for a germ: curvature K(z) and metric density
/// e^{2 phi}(z) on a guaranteed disk |z| < domain_radius().
///
/// Generic germs invert P(K) = 2 Re z by bracketed monotone root finding.
/// Exceptional germs invert the radial implicit equation
///     sgn(sigma) (K - K0) exp(G(K)) = lambda |z|^2,
/// where G(K) is the primitive of 1/p(s) - sigma/(s - K0) divided by sigma,
/// a smooth integrand at the simple root K0. Both primitives live in frozen
/// adaptive-Simpson caches, so evaluation is deterministic and smooth.
///
/// Instances are immutable after construction; concurrent calls are safe.
class GermEvaluator {
 public:
  explicit GermEvaluator(GermSpec spec, EvaluatorConfig cfg = {});

  const GermSpec& spec() const { return spec_; }
  double domain_radius() const { return radius_; }

  /// Curvature interval (K-, K+): the maximal reachable curvature range
  /// around K0 (p > 0 for generic germs, the admissible side of K0 for
  /// exceptional ones). Endpoints may be infinite.
  std::pair<double, double> curvature_interval() const {
    return {k_lo_, k_hi_};
  }

  double curvature_at(std::complex<double> z) const;
  double density_at(std::complex<double> z) const;
  std::pair<double, double> curvature_density_at(std::complex<double> z) const;

  /// Generic germs only: P(t) = \int_{K0}^{t} ds / p(s).
  /// Errors with out_of_interval outside (K-, K+).
  double primitive(double t) const;

 private:
  enum class Kind { einstein, generic, exceptional };

  void init_einstein(const EinsteinGerm& g);
  void init_generic(const GenericGerm& g);
  void init_exceptional(const ExceptionalGerm& g);

  void check_domain(std::complex<double> z) const;
  double solve_generic(double target) const;
  double solve_exceptional(double target) const;  // returns u = sgn (K - K0)
  double radial_log_correction(double u) const;   // G at K0 + sgn u

  GermSpec spec_;
  EvaluatorConfig cfg_;
  Kind kind_ = Kind::einstein;

  CubicParams cubic_{};
  double K0_ = 0.0;
  double lambda_ = 0.0;
  double sigma_ = 0.0;
  double sgn_ = 0.0;    // sgn(sigma)
  double dp0_ = 0.0;    // p'(K0)
  double delta_ = 0.0;  // clamped half-width of the working curvature range
  double k_lo_ = 0.0, k_hi_ = 0.0;
  double P_lo_ = 0.0, P_hi_ = 0.0;  // generic: P(K0 -+ delta)
  double G_delta_ = 0.0;            // exceptional: G at u = delta
  double radius_ = 0.0;

  std::optional<CachedAntiderivative> primitive_cache_;  // generic
  std::optional<CachedAntiderivative> radial_cache_;     // exceptional
};

/// Guaranteed radius for a spec (infinite only for Einstein K0 >= 0).
double domain_radius(const GermSpec& spec, EvaluatorConfig cfg = {});

}  // namespace extk
