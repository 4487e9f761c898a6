#pragma once

#include <complex>
#include <functional>

#include "extk/germ.hpp"

namespace extk {

using complexd = std::complex<double>;
using RealField = std::function<double(complexd)>;
using ComplexField = std::function<complexd(complexd)>;

struct VerifyTolerances {
  double curvature = 1e-4;
  double holomorphy = 1e-4;
  double model = 1e-4;
};

struct VerifyOptions {
  int n_points = 64;
  double h = 0.0;  // 0 -> 1e-3 * grid_radius
  VerifyTolerances tol{};
  bool parallel = true;
  EvaluatorConfig eval{};
};

struct GridSpecInfo {
  double radius = 0.0;
  int n = 0;
};

struct VerificationReport {
  GridSpecInfo grid{};
  double max_curvature_residual = 0.0;
  double max_holomorphy_residual = 0.0;
  double max_model_residual = 0.0;  // relative to max(1, |model|)
  double step_h = 0.0;
  bool pass = false;
};

/// Wirtinger derivatives (d/dz, d/dzbar) by second-order central differences
/// on the 4-point stencil z +- h, z +- ih.
std::pair<complexd, complexd> wirtinger(const ComplexField& f, complexd z,
                                        double h);

/// Gaussian curvature from the density alone: K = -4 phi_{z zbar} e^{-2 phi}
/// with phi = ln(density)/2 and phi_{z zbar} = (phi_xx + phi_yy)/4 by central
/// differences. Errors with non_positive_density if the stencil leaves the
/// positive cone.
double curvature_from_density(const RealField& density, complexd z, double h);

/// Scaled curvature gradient field F = 4 (dK/dzbar) / density. Holomorphy of
/// F is the defining condition checked by verify().
complexd gradient_field(const RealField& density, const RealField& curvature,
                        complexd z, double h);

/// Core harness: samples n points on a golden-angle spiral in the disk of
/// grid_radius, computing at each point the curvature residual
/// |K_fd - K_eval|, the holomorphy residual |dF/dzbar|, and the model
/// residual |F - model| / max(1, |model|). Maxima are reduced over the grid;
/// the serial path is the reference, the parallel one must match it exactly.
VerificationReport verify_fields(const RealField& density,
                                 const RealField& curvature,
                                 const ComplexField& model, double grid_radius,
                                 const VerifyOptions& opts = {});

/// Verification of a constructed germ through its public evaluator surface
/// only. Errors with grid_exceeds_domain when the grid (plus stencil margin)
/// does not fit inside the guaranteed disk.
VerificationReport verify(const GermSpec& spec, double grid_radius,
                          const VerifyOptions& opts = {});

/// Model gradient field for a spec: 0 (Einstein), 1 (generic), z/sigma
/// (exceptional).
ComplexField model_gradient_field(const GermSpec& spec);

}  // namespace extk
