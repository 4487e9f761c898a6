#include "extk/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace extk {

namespace {

constexpr double kDiscRelTol = 1e-9;    // D == 0 band: |4C^3 - 9C'^2| vs scale
constexpr double kTripleTol = 1e-14;    // C = C' = 0 band

// All real roots satisfy |t| <= max(sqrt(6|C|), cbrt(6|C'|)); inflate a hair
// so the bound itself is strictly outside.
double root_bound(const CubicParams& p) {
  const double m = std::max(std::sqrt(6.0 * std::abs(p.C)),
                            std::cbrt(6.0 * std::abs(p.Cprime)));
  return m * (1.0 + 1e-7) + 1e-12;
}

// Newton polish confined to a sign-changing bracket; falls back to bisection
// whenever the Newton step leaves the bracket.
double polish(const CubicParams& p, double x, double lo, double hi,
              double flo) {
  if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
  for (int i = 0; i < 50; ++i) {
    const double f = p.eval(x);
    if (f == 0.0) return x;
    if ((f > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = f;
    } else {
      hi = x;
    }
    const double d = p.deriv(x);
    double xn = (d != 0.0) ? x - f / d : 0.5 * (lo + hi);
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (xn == x) break;
    x = xn;
  }
  return x;
}

double polish(const CubicParams& p, double x, double lo, double hi) {
  return polish(p, x, lo, hi, p.eval(lo));
}

}  // namespace

CubicParams make_cubic(double C, double Cprime) {
  if (!std::isfinite(C) || !std::isfinite(Cprime))
    fail(error_code::invalid_argument, "cubic coefficients must be finite");
  return {C, Cprime};
}

RootStructure root_structure(const CubicParams& p) {
  const double a = 4.0 * p.C * p.C * p.C;
  const double b = 9.0 * p.Cprime * p.Cprime;
  const double scale = std::max(std::abs(a), std::abs(b));
  const bool disc_zero = std::abs(a - b) <= kDiscRelTol * scale;

  if (disc_zero && std::abs(p.C) <= kTripleTol && std::abs(p.Cprime) <= kTripleTol)
    return TripleZero{};

  if (disc_zero && p.C > 0.0) {
    // One double root at a critical point, one simple root at -2x the double.
    const double d_raw = -3.0 * p.Cprime / (2.0 * p.C);
    const double dbl = std::copysign(std::sqrt(p.C), d_raw);
    double smp = -2.0 * dbl;
    const double m = root_bound(p);
    if (dbl > 0.0)
      smp = polish(p, smp, -m, -0.5 * dbl);
    else
      smp = polish(p, smp, -0.5 * dbl, m);
    return DoubleAndSimple{dbl, smp};
  }

  if (a > b) {
    // Three distinct real roots; C > 0 is forced. The critical points
    // +-sqrt(C) separate them, giving guaranteed brackets.
    const double rc = std::sqrt(p.C);
    const double arg =
        std::clamp(3.0 * p.Cprime / (2.0 * p.C * rc), -1.0, 1.0);
    const double theta = std::acos(arg);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r[3];
    for (int k = 0; k < 3; ++k)
      r[k] = 2.0 * rc * std::cos((theta - two_pi * k) / 3.0);
    std::sort(r, r + 3, std::greater<>());
    const double m = root_bound(p);
    const double r1 = polish(p, r[0], rc, m);
    const double r2 = polish(p, r[1], -rc, rc);
    const double r3 = polish(p, r[2], -m, -rc);
    return ThreeDistinctReal{r1, r2, r3};
  }

  // One real root (the other two form a conjugate non-real pair).
  const double inner = 0.25 * (b - a);
  const double s = std::sqrt(std::max(inner, 0.0));
  const double w3 = 1.5 * p.Cprime + std::copysign(s, p.Cprime);
  double r;
  if (w3 == 0.0) {
    r = 0.0;
  } else {
    const double w = std::cbrt(w3);
    r = w + p.C / w;
  }
  const double m = root_bound(p);
  r = polish(p, r, -m, m);
  return OneReal{r};
}

std::vector<double> real_roots(const CubicParams& p) {
  const RootStructure rs = root_structure(p);
  std::vector<double> out;
  if (const auto* t = std::get_if<ThreeDistinctReal>(&rs)) {
    out = {t->r3, t->r2, t->r1};
  } else if (const auto* d = std::get_if<DoubleAndSimple>(&rs)) {
    out = {std::min(d->dbl, d->smp), std::max(d->dbl, d->smp)};
  } else if (std::holds_alternative<TripleZero>(rs)) {
    out = {0.0};
  } else {
    out = {std::get<OneReal>(rs).r};
  }
  return out;
}

}  // namespace extk
