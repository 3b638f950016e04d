#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "vsde/frame.hpp"

namespace vsde {

// Signed Sobel responses (raw kernel output, slope gain 8) and magnitude.
struct GradientMaps {
  RealMap gx;
  RealMap gy;
  RealMap magnitude;
};

// Slope gain of the 3x3 Sobel kernel: a unit ramp yields a response of 8.
inline constexpr double kSobelSlopeGain = 8.0;

enum class Region : std::uint8_t { ls = 0, ns = 1 };

// Per-pixel locally-stationary / non-stationary labels.
class RegionMask {
 public:
  RegionMask() = default;
  RegionMask(int width, int height, Region fill = Region::ls);
  RegionMask(int width, int height, std::vector<Region> labels);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t ls_count() const noexcept { return ls_count_; }
  std::size_t ns_count() const noexcept { return ns_count_; }

  Region operator()(int x, int y) const noexcept {
    return labels_[static_cast<std::size_t>(y) * width_ + x];
  }
  Region at(std::size_t index) const noexcept { return labels_[index]; }
  void set(int x, int y, Region r);

  std::span<const Region> labels() const noexcept { return labels_; }

  // Raster-order indices of the NS pixels.
  std::vector<std::size_t> ns_indices() const;

  friend bool operator==(const RegionMask&, const RegionMask&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<Region> labels_;
  std::size_t ls_count_ = 0;
  std::size_t ns_count_ = 0;
};

struct JemWeights {
  double depth = 1.0;
  double texture = 0.5;
};

GradientMaps sobel_gradients(const LumaFrame& frame);

// (v - min) / (max - min); all zeros for a flat map.
RealMap normalize_map(const RealMap& map);

// w_d * G_D + w_t * G_T * (1 - G_D), on normalized maps.
RealMap joint_edge_map(const RealMap& gt_norm, const RealMap& gd_norm,
                       JemWeights weights = {});

inline constexpr int kOtsuBins = 256;

// Histogram bin of a [0, 1] value: round(v * 255), clamped.
int otsu_bin(double value) noexcept;

std::vector<std::uint64_t> otsu_histogram(std::span<const double> values);

// Bin index maximizing between-class variance (class 0 = bins <= t); the
// lowest maximizer wins ties. Returns the single occupied bin for a map
// with one occupied bin.
int otsu_bin_threshold(std::span<const std::uint64_t> histogram);

// Threshold value on the map's own scale: the largest map value that falls
// in class 0. Classifying with "strictly above" reproduces the histogram
// split exactly, and a flat map returns its single value.
double otsu_threshold(std::span<const double> values);
inline double otsu_threshold(const RealMap& map) {
  return otsu_threshold(map.samples());
}

// Strictly above threshold -> NS, otherwise LS.
RegionMask classify_ls_ns(const RealMap& jem, double threshold);

// T(x+1, y) - 2 T(x, y) + T(x-1, y) at each NS pixel (replicate borders),
// in the order of mask.ns_indices().
std::vector<double> second_derivative_x(const LumaFrame& frame,
                                        const RegionMask& mask);

struct ViewClassification {
  GradientMaps texture_gradients;
  GradientMaps depth_gradients;
  RealMap jem;
  double threshold = 0.0;
  RegionMask mask;
};

// Full joint texture-depth classification of one reference view, run on the
// original (uncompressed) texture and depth.
ViewClassification classify_view(const LumaFrame& texture,
                                 const LumaFrame& depth,
                                 JemWeights weights = {});

// 0 = LS, 255 = NS.
LumaFrame mask_to_frame(const RegionMask& mask);

}  // namespace vsde
