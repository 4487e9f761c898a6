#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "extk/germ.hpp"

namespace extk {

/// Uniform double in [0, 1) from the top 53 bits of the generator output.
/// Standard-library distributions are implementation-defined; this mapping
/// plus std::mt19937_64 keeps sampled bytes identical across platforms.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// Sampling boxes in chart coordinates; pullback through the chart inverses
/// yields valid specs by construction.
struct GenericChartBox {
  double x1_lo = -1.5, x1_hi = 1.5;  // C
  double x2_lo = -1.0, x2_hi = 1.0;  // ln p(K0)
  double x3_lo = -1.5, x3_hi = 1.5;  // K0
};

struct ExceptionalChartBox {
  double K0_lo = -1.5, K0_hi = 1.5;
  double t_abs_lo = 0.4, t_abs_hi = 2.5;  // |t|, sign drawn separately
  double log_lambda_lo = -1.5, log_lambda_hi = 1.5;
};

GermSpec sample_generic(std::mt19937_64& rng, const GenericChartBox& box = {});
GermSpec sample_exceptional(std::mt19937_64& rng,
                            const ExceptionalChartBox& box = {});

std::vector<GermSpec> sample_generic_specs(int count, std::uint64_t seed,
                                           const GenericChartBox& box = {});
std::vector<GermSpec> sample_exceptional_specs(
    int count, std::uint64_t seed, const ExceptionalChartBox& box = {});

}  // namespace extk
