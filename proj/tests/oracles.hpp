// Test-only oracles, kept independent of the library's evaluation paths:
// fixed-grid quadrature instead of adaptive panels, scan-and-bisect root
// counting instead of closed forms, explicit ODE marches instead of the
// implicit-equation solvers, and a literal grid search for the HCMU
// parametrization.
#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "extk/cubic.hpp"

namespace oracle {

// Composite Simpson on a fixed uniform grid (panels must be even).
template <class F>
double composite_simpson(F&& f, double a, double b, int panels = 20000) {
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

struct RootScan {
  int count = 0;
  std::vector<double> roots;  // ascending
};

// Sign-change root counting over [-R, R]. The two critical points of the
// cubic are inserted as extra nodes, so every monotone piece has nodes at
// both ends and no sign change can hide between grid points. Each bracket
// is then bisected down to ~1e-13 relative width.
inline RootScan scan_roots(const extk::CubicParams& p, double R,
                           int grid_n = 4096) {
  std::vector<double> nodes;
  nodes.reserve(grid_n + 3);
  for (int i = 0; i <= grid_n; ++i)
    nodes.push_back(-R + 2.0 * R * i / grid_n);
  if (p.C > 0.0) {
    const double rc = std::sqrt(p.C);
    if (rc < R) {
      nodes.push_back(-rc);
      nodes.push_back(rc);
    }
  }
  std::sort(nodes.begin(), nodes.end());

  RootScan out;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    double lo = nodes[i], hi = nodes[i + 1];
    if (lo == hi) continue;
    double flo = p.eval(lo), fhi = p.eval(hi);
    if (flo == 0.0) continue;  // counted at the previous cell's hi end
    bool bracket = (flo > 0.0) != (fhi > 0.0);
    if (!bracket) continue;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (hi - lo <= 1e-13 * (1.0 + std::abs(mid))) break;
      const double fm = p.eval(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm > 0.0) == (flo > 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    out.roots.push_back(0.5 * (lo + hi));
  }
  out.count = static_cast<int>(out.roots.size());
  return out;
}

// Third-order expansion of the curvature of a translational germ in
// s = z + zbar: K = K0 + p s + p p' s^2/2 + (p'' p^2 + p'^2 p) s^3/6.
inline double taylor_generic_curvature(const extk::CubicParams& c, double K0,
                                       double s) {
  const double p = c.eval(K0);
  const double dp = c.deriv(K0);
  const double ddp = -2.0 * K0;
  return K0 + p * s + 0.5 * p * dp * s * s +
         (ddp * p * p + dp * dp * p) * s * s * s / 6.0;
}

// RK4 march of dK/ds = p(K) from K(0) = K0.
inline double march_generic(const extk::CubicParams& c, double K0,
                            double s_target, int steps = 4000) {
  double k = K0;
  const double h = s_target / steps;
  for (int i = 0; i < steps; ++i) {
    const double k1 = c.eval(k);
    const double k2 = c.eval(k + 0.5 * h * k1);
    const double k3 = c.eval(k + 0.5 * h * k2);
    const double k4 = c.eval(k + h * k3);
    k += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return k;
}

// RK4 march of the radial equation written in u = sgn(sigma) (K - K0) and
// s = ln r:  du/ds = 2 sigma u q(sgn u),  q(tau) = p'(K0) - (K0 + tau/3) tau.
// Marching u directly keeps full relative precision near the origin, where
// u ~ lambda r^2 sits far below one ulp of K0. Seeded with the leading
// asymptotic u(r0) = lambda r0^2.
inline double march_exceptional(const extk::CubicParams& c, double K0,
                                double sigma, double lambda, double r0,
                                double r_target, int steps = 4000) {
  const double sgn = sigma > 0.0 ? 1.0 : -1.0;
  const double dp0 = c.deriv(K0);
  auto rhs = [&](double u) {
    const double tau = sgn * u;
    const double q = dp0 - (K0 + tau / 3.0) * tau;
    return 2.0 * sigma * u * q;
  };
  double u = lambda * r0 * r0;
  const double h = (std::log(r_target) - std::log(r0)) / steps;
  for (int i = 0; i < steps; ++i) {
    const double k1 = rhs(u);
    const double k2 = rhs(u + 0.5 * h * k1);
    const double k3 = rhs(u + 0.5 * h * k2);
    const double k4 = rhs(u + h * k3);
    u += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return K0 + sgn * u;
}

// Literal grid search over the compact-surface parametrization
//   C  = (K1^2 + K1 K2 + K2^2)/3,  C' = -K1 K2 (K1 + K2)/3,
// K1 in (0, R] and K2 in [-K1/2, K1) with step R*1e-3, coefficient match
// tolerance 1e-6. Used only to cross-check the sorted-roots classifier.
struct HcmuSearch {
  enum Kind { none, generic, cone_neg, cone_pos, cusp } kind = none;
  double K1 = 0.0, K2 = 0.0;
};

inline HcmuSearch hcmu_grid_search(const extk::CubicParams& c, double K0,
                                   bool exceptional, double R = 10.0) {
  const double step = 1e-3 * R;
  const double ctol = 1e-6;
  const double ktol = 1e-6;
  HcmuSearch out;
  const int n1 = static_cast<int>(std::round(R / step));
  for (int i = 1; i <= n1; ++i) {
    const double K1 = i * step;
    for (double K2 = -0.5 * K1; K2 < K1; K2 += step) {
      const double C = (K1 * K1 + K1 * K2 + K2 * K2) / 3.0;
      const double Cp = -K1 * K2 * (K1 + K2) / 3.0;
      if (std::abs(C - c.C) > ctol || std::abs(Cp - c.Cprime) > ctol) continue;
      if (!exceptional) {
        if (K0 > K2 && K0 < K1) {
          out = {HcmuSearch::generic, K1, K2};
          return out;
        }
        continue;
      }
      const bool at_k1 = std::abs(K0 - K1) <= ktol;
      const bool at_k2 = std::abs(K0 - K2) <= ktol;
      const bool k2_bottom = std::abs(K2 + 0.5 * K1) <= ktol;
      if (at_k1 && k2_bottom) {
        out = {HcmuSearch::cusp, K1, K2};
        return out;
      }
      if (at_k1 && !k2_bottom) {
        out = {HcmuSearch::cone_neg, K1, K2};
        return out;
      }
      if (at_k2 && !k2_bottom && !at_k1) {
        out = {HcmuSearch::cone_pos, K1, K2};
        return out;
      }
    }
  }
  return out;
}

}  // namespace oracle
