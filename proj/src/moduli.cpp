#include "extk/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace extk {

namespace {

const GenericGerm& require_generic(const GermSpec& spec) {
  const auto* g = std::get_if<GenericGerm>(&spec);
  if (!g) fail(error_code::wrong_family, "expected a generic germ");
  return *g;
}

const ExceptionalGerm& require_exceptional(const GermSpec& spec) {
  const auto* g = std::get_if<ExceptionalGerm>(&spec);
  if (!g) fail(error_code::wrong_family, "expected an exceptional germ");
  return *g;
}

// polynomial extrapolation of (x_i, y_i) to x = 0
double neville_at_zero(const std::vector<double>& xs,
                       std::vector<double> ys) {
  const std::size_t n = ys.size();
  for (std::size_t lvl = 1; lvl < n; ++lvl)
    for (std::size_t i = 0; i + lvl < n; ++i)
      ys[i] = (xs[i + lvl] * ys[i] - xs[i] * ys[i + lvl]) /
              (xs[i + lvl] - xs[i]);
  return ys[0];
}

int nearest_index(const std::vector<double>& roots, double k0) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(roots.size()); ++i)
    if (std::abs(roots[i] - k0) < std::abs(roots[best] - k0)) best = i;
  return best;
}

}  // namespace

GenericChart generic_chart(const GermSpec& spec) {
  const auto& g = require_generic(spec);
  return {g.cubic.C, std::log(g.cubic.eval(g.K0)), g.K0};
}

GermSpec generic_chart_inv(const GenericChart& coords) {
  for (double v : {coords.x1, coords.x2, coords.x3})
    if (!std::isfinite(v))
      fail(error_code::invalid_argument, "chart coordinates must be finite");
  const double C = coords.x1;
  const double K0 = coords.x3;
  const double Cprime = std::exp(coords.x2) + K0 * K0 * K0 / 3.0 - C * K0;
  return make_generic(make_cubic(C, Cprime), K0);
}

ExceptionalChart exceptional_chart(const GermSpec& spec) {
  const auto& g = require_exceptional(spec);
  return {g.K0, g.cubic.deriv(g.K0), std::log(g.lambda)};
}

GermSpec exceptional_chart_inv(double K0, double t, double lambda) {
  for (double v : {K0, t, lambda})
    if (!std::isfinite(v))
      fail(error_code::invalid_argument, "chart coordinates must be finite");
  if (t == 0.0)
    fail(error_code::zero_t, "t = 0 leaves the simple-root surface");
  const double C = t + K0 * K0;
  const double Cprime = -2.0 * K0 * K0 * K0 / 3.0 - t * K0;
  return make_exceptional(make_cubic(C, Cprime), K0, lambda);
}

Component component_of(const GermSpec& spec) {
  if (std::holds_alternative<EinsteinGerm>(spec))
    fail(error_code::einstein_not_in_moduli,
         "Einstein germs lie outside the extremal non-Einstein moduli space");
  if (std::holds_alternative<GenericGerm>(spec)) return Component::generic;
  return std::get<ExceptionalGerm>(spec).sigma > 0.0
             ? Component::exceptional_sigma_positive
             : Component::exceptional_sigma_negative;
}

double fifth_invariant_estimate(const GermEvaluator& eval,
                                std::span<const double> radii) {
  const auto& g = require_exceptional(eval.spec());
  if (radii.size() < 3)
    fail(error_code::invalid_argument, "need at least 3 radii");
  for (std::size_t i = 0; i + 1 < radii.size(); ++i)
    if (!(radii[i] > radii[i + 1]))
      fail(error_code::invalid_argument, "radii must be strictly decreasing");
  if (!(radii.front() >= 10.0 * radii.back()))
    fail(error_code::invalid_argument, "radii must span at least a decade");
  if (!(radii.back() > 0.0) || !(radii.front() < eval.domain_radius()))
    fail(error_code::out_of_domain, "radii outside the guaranteed disk");

  const double sgn = g.sigma > 0.0 ? 1.0 : -1.0;
  std::vector<double> xs(radii.size()), ys(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double r = radii[i];
    const double k = eval.curvature_at({r, 0.0});
    xs[i] = r * r;
    ys[i] = sgn * (k - g.K0) / (r * r);
  }
  return neville_at_zero(xs, std::move(ys));
}

HcmuClass hcmu_class(const GermSpec& spec) {
  if (std::holds_alternative<EinsteinGerm>(spec))
    fail(error_code::einstein_not_in_moduli,
         "Einstein germs lie outside the extremal non-Einstein moduli space");

  if (const auto* g = std::get_if<GenericGerm>(&spec)) {
    const RootStructure rs = root_structure(g->cubic);
    if (const auto* t = std::get_if<ThreeDistinctReal>(&rs)) {
      if (g->K0 > t->r2 && g->K0 < t->r1) return GenericHcmu{t->r1, t->r2};
      return NotHcmu{"K0 outside (K2, K1)"};
    }
    if (const auto* d = std::get_if<DoubleAndSimple>(&rs)) {
      // simple above double: sorted roots (s, d, d), K2 = -K1/2 boundary
      if (d->smp > d->dbl && g->K0 > d->dbl && g->K0 < d->smp)
        return GenericHcmu{d->smp, d->dbl};
      if (d->smp > d->dbl) return NotHcmu{"K0 outside (K2, K1)"};
      return NotHcmu{"largest root is a double root"};
    }
    if (std::holds_alternative<TripleZero>(rs))
      return NotHcmu{"triple zero cubic"};
    return NotHcmu{"complex roots"};
  }

  const auto& e = std::get<ExceptionalGerm>(spec);
  const RootStructure rs = root_structure(e.cubic);
  if (const auto* t = std::get_if<ThreeDistinctReal>(&rs)) {
    const std::vector<double> roots = {t->r1, t->r2, t->r3};
    switch (nearest_index(roots, e.K0)) {
      case 0:
        return ExceptionalConeHcmu{t->r1, t->r2, -1};
      case 1:
        return ExceptionalConeHcmu{t->r1, t->r2, +1};
      default:
        return NotHcmu{"K0 is the smallest root"};
    }
  }
  if (const auto* d = std::get_if<DoubleAndSimple>(&rs)) {
    // K0 can only be the simple root (multiple roots fail construction)
    if (d->smp > d->dbl) return ExceptionalCuspHcmu{d->smp};
    return NotHcmu{"K0 is the smallest root"};
  }
  if (std::holds_alternative<TripleZero>(rs))
    return NotHcmu{"triple zero cubic"};
  return NotHcmu{"complex roots"};
}

}  // namespace extk
