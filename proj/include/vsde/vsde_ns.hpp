#pragma once

#include <cstddef>
#include <span>

#include "vsde/frame.hpp"
#include "vsde/gradient_classify.hpp"

namespace vsde {

struct NsEstimate {
  double value = 0.0;  // mean over NS pixels
  std::size_t ns_count = 0;
  double first_order_share = 0.0;  // fraction of value from the gradient term
  double first_order_term = 0.0;   // mean of (gx / 8)^2 * nu2
  double second_order_term = 0.0;  // mean of 1.5 * curvature^2 * nu2^2
};

// Second-order Taylor estimate of the warping error at NS pixels:
//   mean over NS of (gx / 8)^2 * nu2 + 1.5 * curvature^2 * nu2^2
// where gx is the raw Sobel response (full map), `curvature` holds the
// horizontal second difference at each NS pixel in mask.ns_indices() order
// and nu2 is the disparity-error variance. The 1.5 factor uses the Laplace
// fourth moment E[dx^4] = 6 nu2^2.
// Returns a zero estimate with ns_count 0 when the mask has no NS pixel.
// Throws std::invalid_argument for negative nu2 or mismatched inputs.
NsEstimate ns_distortion(const LumaFrame& texture_hat, const RegionMask& mask,
                         const RealMap& gx, std::span<const double> curvature,
                         double disparity_variance);

}  // namespace vsde
