#pragma once

// Reference view synthesizer used as ground truth for validation. The
// estimator never calls into this module.

#include <cstdint>
#include <vector>

#include "vsde/camera.hpp"
#include "vsde/frame.hpp"
#include "vsde/geometry.hpp"
#include "vsde/metrics.hpp"

namespace vsde::oracle {

// Reference pixels forward-warped into the virtual view. samples and
// depth_buffer are 0 wherever valid is 0.
struct WarpedView {
  LumaFrame samples;
  LumaFrame valid;  // 1 = some source pixel landed here
  LumaFrame depth_buffer;
};

enum class RegionLabel : std::uint8_t {
  overlap = 0,
  left_only = 1,
  right_only = 2,
  none = 3,
};

struct RegionLabelMap {
  int width = 0;
  int height = 0;
  std::vector<RegionLabel> labels;

  RegionLabel operator()(int x, int y) const noexcept {
    return labels[static_cast<std::size_t>(y) * width + x];
  }
  // Fraction of pixels carrying `label`.
  double fraction(RegionLabel label) const;
};

// Integer target column offset: round(k * d + c), ties toward +infinity.
int rounded_disparity(const DisparityModel& model, int d);

// Each source pixel (x', y) lands at x' + model.direction() * rounded
// disparity; the larger depth level (nearer) wins collisions; out-of-frame
// targets are dropped.
WarpedView forward_warp(const LumaFrame& texture, const LumaFrame& depth,
                        const DisparityModel& model);

struct BlendResult {
  LumaFrame frame;  // holes hold 0
  RegionLabelMap labels;
  LumaFrame depth;  // nearer of the valid warped depths, 0 in holes
};

// Overlap: round(alpha * left + (1 - alpha) * right); single-valid pixels
// copy that view; pixels valid in neither are holes labelled none.
BlendResult blend_views(const WarpedView& left, const WarpedView& right,
                        double alpha_blend);

inline constexpr int kHoleFillWindow = 7;

// Fills every none-labelled pixel. Each horizontal hole run takes the
// rounded mean of whichever side neighbourhood (up to `window` non-hole
// pixels scanning outward) has the lower variance; equal variances pick the
// farther side (lower mean depth level), then the left side. Rows with no
// valid pixel are then filled from the nearest filled row above, else below.
// Throws CannotFill when the frame has no valid pixel.
LumaFrame hole_fill(const LumaFrame& frame, const RegionLabelMap& labels,
                    const LumaFrame& depth, int window = kHoleFillWindow);

struct SynthesisResult {
  LumaFrame view;
  RegionLabelMap labels;
};

SynthesisResult synthesize(const LumaFrame& tl, const LumaFrame& dl,
                           const LumaFrame& tr, const LumaFrame& dr,
                           const CameraConfig& cam);

// Number of forward_warp and synthesize calls made in this process.
std::uint64_t call_count() noexcept;

}  // namespace vsde::oracle
