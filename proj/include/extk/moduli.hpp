#pragma once

#include <span>
#include <string>
#include <variant>

#include "extk/germ.hpp"

namespace extk {

/// Image of a generic germ under (C, C', K0) -> (C, ln p(K0), K0).
struct GenericChart {
  double x1, x2, x3;
};

/// Image of an exceptional germ under (C, C', K0) -> (K0, C - K0^2) with
/// log lambda carried as the third coordinate; t = C - K0^2 = p'(K0) = 1/sigma
/// keeps one sign per component, so each component chart is onto R^3.
struct ExceptionalChart {
  double K0, t, log_lambda;
};

using ModuliCoords = std::variant<GenericChart, ExceptionalChart>;

enum class Component {
  generic,
  exceptional_sigma_positive,
  exceptional_sigma_negative,
};

struct GenericHcmu {
  double K1, K2;
};
struct ExceptionalConeHcmu {
  double K1, K2;
  int sigma_sign;  // +1 or -1
};
struct ExceptionalCuspHcmu {
  double K1;
};
struct NotHcmu {
  std::string reason;
};

using HcmuClass =
    std::variant<GenericHcmu, ExceptionalConeHcmu, ExceptionalCuspHcmu, NotHcmu>;

GenericChart generic_chart(const GermSpec& spec);
GermSpec generic_chart_inv(const GenericChart& coords);

ExceptionalChart exceptional_chart(const GermSpec& spec);
/// Errors with zero_t when t == 0 (the map leaves the root surface).
GermSpec exceptional_chart_inv(double K0, double t, double lambda);

/// Errors with einstein_not_in_moduli for Einstein germs.
Component component_of(const GermSpec& spec);

/// Richardson-extrapolated limit of sgn(sigma) (K(r) - K0) / r^2 as r -> 0.
/// Requires an exceptional evaluator and at least 3 decreasing radii spanning
/// a decade, all inside the guaranteed disk.
double fifth_invariant_estimate(const GermEvaluator& eval,
                                std::span<const double> radii);

/// Membership test against the rotationally-symmetric compact-surface models.
/// Decision procedure over the sorted real roots of p (which sum to zero):
///   generic: HCMU iff all roots real, the largest root r1 is simple and
///            K0 in (r2, r1); then K1 = r1, K2 = r2.
///   exceptional: K0 = r1 simple with r2 > r3 -> cone (sigma < 0 branch);
///            K0 = r2 of three distinct roots -> cone (sigma > 0 branch);
///            K0 = r1 simple with r2 = r3 -> cusp (K2 = -K1/2);
///            otherwise not HCMU.
HcmuClass hcmu_class(const GermSpec& spec);

}  // namespace extk
