#pragma once

#include <variant>
#include <vector>

#include "extk/errors.hpp"

namespace extk {

/// Coefficients of the characteristic cubic p(t) = -t^3/3 + C t + C'.
/// C carries curvature^2 units, Cprime curvature^3 units.
struct CubicParams {
  double C = 0.0;
  double Cprime = 0.0;

  double eval(double t) const { return (C - t * t / 3.0) * t + Cprime; }
  double deriv(double t) const { return C - t * t; }
  double discriminant() const {
    return 27.0 * (4.0 * C * C * C - 9.0 * Cprime * Cprime);
  }
};

/// Validates finiteness.
CubicParams make_cubic(double C, double Cprime);

struct ThreeDistinctReal {
  double r1, r2, r3;  // r1 > r2 > r3
};
struct DoubleAndSimple {
  double dbl, smp;
};
struct TripleZero {};
struct OneReal {
  double r;  // the complex pair is not stored
};

using RootStructure =
    std::variant<ThreeDistinctReal, DoubleAndSimple, TripleZero, OneReal>;

/// Real-root structure of p. Discriminant sign decides the case; the
/// D == 0 branch uses a relative tolerance of 1e-9 on 4C^3 vs 9C'^2 so that
/// classification is stable under JSON round-trips. Roots come from the
/// trigonometric/Cardano closed forms followed by a bracketed Newton polish.
RootStructure root_structure(const CubicParams& p);

/// Distinct real roots in ascending order (double roots appear once).
std::vector<double> real_roots(const CubicParams& p);

}  // namespace extk
