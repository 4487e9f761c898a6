#pragma once

#include <vector>

#include "extk/germ.hpp"

namespace extk {

/// n x n sample of curvature and density on the square inscribed in the disk
/// of the given radius. Row-major by im then re; flattened index j*n + i.
struct GridResult {
  int n = 0;
  double half_side = 0.0;
  std::vector<double> re, im, K, density;
};

/// Serial reference kernel.
GridResult evaluate_square_grid_serial(const GermEvaluator& eval, double radius,
                                       int n);

/// OpenMP kernel; produces byte-identical results to the serial reference.
GridResult evaluate_square_grid(const GermEvaluator& eval, double radius, int n,
                                bool parallel = true);

}  // namespace extk
