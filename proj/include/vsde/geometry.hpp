#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "vsde/camera.hpp"
#include "vsde/frame.hpp"
#include "vsde/gradient_classify.hpp"

namespace vsde {

// Disparity of a depth level d (0..255, 255 = nearest) between a reference
// view and the virtual view: k * d + c pixels.
struct DisparityModel {
  double k = 0.0;
  double c = 0.0;
  double baseline = 0.0;
  ViewSide side = ViewSide::left;

  // Direction a reference pixel moves toward the virtual view: the left
  // reference shifts right (+1), the right reference shifts left (-1).
  int direction() const noexcept { return side == ViewSide::left ? 1 : -1; }
};

DisparityModel disparity_model(const CameraConfig& cam, ViewSide side);

// k * d + c. Throws std::invalid_argument for d outside [0, 255].
double disparity(const DisparityModel& model, double d);

// Metric depth of a quantized inverse-depth level.
double depth_to_metric(double d, double z_near, double z_far);
// Inverse of depth_to_metric (real-valued level).
double metric_to_depth(double z, double z_near, double z_far);

inline constexpr int kMaxDepthError = 255;
inline constexpr std::size_t kDepthErrorBins = 2 * kMaxDepthError + 1;

// Statistics of the depth coding error dD = d_hat - d.
struct DepthErrorStats {
  double mean = 0.0;
  double variance = 0.0;  // mean removed
  // Probability mass of dD = i - 255 at index i.
  std::array<double, kDepthErrorBins> histogram{};
  double disparity_variance = 0.0;  // k^2 * variance
  std::size_t count = 0;

  double probability(int delta) const noexcept {
    return histogram[static_cast<std::size_t>(delta + kMaxDepthError)];
  }
};

// Restricts the statistics to pixels of one region class when `restrict_to`
// is given. An empty selection yields zero variance and a delta at 0.
DepthErrorStats depth_error_stats(const LumaFrame& d_orig,
                                  const LumaFrame& d_hat,
                                  const DisparityModel& model,
                                  const RegionMask* mask = nullptr,
                                  std::optional<Region> restrict_to = {});

// Characteristic function of the disparity error k * dD at omega:
// sum_dD p(dD) exp(-j omega k dD).
std::complex<double> disparity_error_char_fn(const DepthErrorStats& stats,
                                             const DisparityModel& model,
                                             double omega);

// Angular frequency of DFT bin `index` out of `n`, mapped to [-pi, pi).
double dft_omega(int index, int n) noexcept;

// Characteristic function sampled on the n-point DFT frequency grid.
std::vector<std::complex<double>> char_fn_on_grid(const DepthErrorStats& stats,
                                                  const DisparityModel& model,
                                                  int n);

}  // namespace vsde
