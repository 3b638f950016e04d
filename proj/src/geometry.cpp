#include "vsde/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vsde {

DisparityModel disparity_model(const CameraConfig& cam, ViewSide side) {
  cam.validate();
  DisparityModel m;
  m.side = side;
  m.baseline = cam.baseline(side);
  const double fb = cam.focal_px * m.baseline;
  m.k = fb / 255.0 * (1.0 / cam.z_near - 1.0 / cam.z_far);
  m.c = fb / cam.z_far;
  return m;
}

double disparity(const DisparityModel& model, double d) {
  if (!(d >= 0.0 && d <= 255.0))
    throw std::invalid_argument("disparity: depth level " + std::to_string(d) +
                                " outside [0, 255]");
  return model.k * d + model.c;
}

double depth_to_metric(double d, double z_near, double z_far) {
  return 1.0 / (d / 255.0 * (1.0 / z_near - 1.0 / z_far) + 1.0 / z_far);
}

double metric_to_depth(double z, double z_near, double z_far) {
  return 255.0 * (1.0 / z - 1.0 / z_far) / (1.0 / z_near - 1.0 / z_far);
}

DepthErrorStats depth_error_stats(const LumaFrame& d_orig,
                                  const LumaFrame& d_hat,
                                  const DisparityModel& model,
                                  const RegionMask* mask,
                                  std::optional<Region> restrict_to) {
  require_same_dims(d_orig, d_hat, "depth_error_stats");
  if (mask && !d_orig.same_dims(mask->width(), mask->height()))
    throw std::invalid_argument("depth_error_stats: mask dimension mismatch");

  std::array<std::uint64_t, kDepthErrorBins> counts{};
  const auto orig = d_orig.samples();
  const auto hat = d_hat.samples();
  std::size_t n = 0;
  for (std::size_t i = 0; i < orig.size(); ++i) {
    if (mask && restrict_to && mask->at(i) != *restrict_to) continue;
    const int delta = static_cast<int>(hat[i]) - static_cast<int>(orig[i]);
    ++counts[static_cast<std::size_t>(delta + kMaxDepthError)];
    ++n;
  }

  DepthErrorStats s;
  s.count = n;
  if (n == 0) {
    s.histogram[kMaxDepthError] = 1.0;
    return s;
  }
  // Moments from the integer histogram: exact sums, order independent.
  std::int64_t sum = 0, sum_sq = 0;
  for (std::size_t i = 0; i < kDepthErrorBins; ++i) {
    const auto delta = static_cast<std::int64_t>(i) - kMaxDepthError;
    const auto c = static_cast<std::int64_t>(counts[i]);
    sum += c * delta;
    sum_sq += c * delta * delta;
    s.histogram[i] = static_cast<double>(counts[i]) / static_cast<double>(n);
  }
  const double dn = static_cast<double>(n);
  s.mean = static_cast<double>(sum) / dn;
  s.variance = std::max(0.0, static_cast<double>(sum_sq) / dn - s.mean * s.mean);
  s.disparity_variance = model.k * model.k * s.variance;
  return s;
}

std::complex<double> disparity_error_char_fn(const DepthErrorStats& stats,
                                             const DisparityModel& model,
                                             double omega) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < kDepthErrorBins; ++i) {
    const double p = stats.histogram[i];
    if (p == 0.0) continue;
    const double dx = model.k * (static_cast<double>(i) - kMaxDepthError);
    re += p * std::cos(omega * dx);
    im -= p * std::sin(omega * dx);
  }
  return {re, im};
}

double dft_omega(int index, int n) noexcept {
  const int folded = index <= (n - 1) / 2 ? index : index - n;
  // Even n: the Nyquist bin n/2 maps to -pi.
  return 2.0 * std::numbers::pi * folded / n;
}

std::vector<std::complex<double>> char_fn_on_grid(const DepthErrorStats& stats,
                                                  const DisparityModel& model,
                                                  int n) {
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out[i] = disparity_error_char_fn(stats, model, dft_omega(i, n));
  return out;
}

}  // namespace vsde
