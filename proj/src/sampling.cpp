#include "extk/sampling.hpp"

#include "extk/moduli.hpp"

namespace extk {

GermSpec sample_generic(std::mt19937_64& rng, const GenericChartBox& box) {
  const double x1 = uniform(rng, box.x1_lo, box.x1_hi);
  const double x2 = uniform(rng, box.x2_lo, box.x2_hi);
  const double x3 = uniform(rng, box.x3_lo, box.x3_hi);
  return generic_chart_inv({x1, x2, x3});
}

GermSpec sample_exceptional(std::mt19937_64& rng,
                            const ExceptionalChartBox& box) {
  const double K0 = uniform(rng, box.K0_lo, box.K0_hi);
  const double t_abs = uniform(rng, box.t_abs_lo, box.t_abs_hi);
  const double sign = (rng() & 1u) ? 1.0 : -1.0;
  const double log_lambda = uniform(rng, box.log_lambda_lo, box.log_lambda_hi);
  return exceptional_chart_inv(K0, sign * t_abs, std::exp(log_lambda));
}

std::vector<GermSpec> sample_generic_specs(int count, std::uint64_t seed,
                                           const GenericChartBox& box) {
  std::mt19937_64 rng(seed);
  std::vector<GermSpec> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(sample_generic(rng, box));
  return out;
}

std::vector<GermSpec> sample_exceptional_specs(int count, std::uint64_t seed,
                                               const ExceptionalChartBox& box) {
  std::mt19937_64 rng(seed);
  std::vector<GermSpec> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(sample_exceptional(rng, box));
  return out;
}

}  // namespace extk
