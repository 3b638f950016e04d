#include "vsde/vsde_ns.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "vsde/kernels.hpp"

namespace vsde {

NsEstimate ns_distortion(const LumaFrame& texture_hat, const RegionMask& mask,
                         const RealMap& gx, std::span<const double> curvature,
                         double disparity_variance) {
  if (!(disparity_variance >= 0.0) || !std::isfinite(disparity_variance))
    throw std::invalid_argument("ns_distortion: disparity variance must be >= 0");
  require_same_dims(texture_hat, gx, "ns_distortion");
  if (!texture_hat.same_dims(mask.width(), mask.height()))
    throw std::invalid_argument("ns_distortion: mask dimension mismatch");
  if (curvature.size() != mask.ns_count())
    throw std::invalid_argument(
        "ns_distortion: curvature count does not match NS pixel count");

  NsEstimate est;
  est.ns_count = mask.ns_count();
  if (est.ns_count == 0) return est;

  const auto idx = mask.ns_indices();
  std::vector<double> slope(idx.size());
  const auto g = gx.samples();
  for (std::size_t i = 0; i < idx.size(); ++i)
    slope[i] = g[idx[i]] / kSobelSlopeGain;

  const auto sums = kernels::parallel::taylor_sums(slope, curvature);
  const double n = static_cast<double>(est.ns_count);
  const double nu2 = disparity_variance;
  est.first_order_term = sums.first * nu2 / n;
  est.second_order_term = 1.5 * sums.second * nu2 * nu2 / n;
  est.value = est.first_order_term + est.second_order_term;
  est.first_order_share = est.value > 0.0 ? est.first_order_term / est.value : 0.0;
  return est;
}

}  // namespace vsde
