#pragma once

namespace vsde {

enum class ViewSide { left, right };

// 1D parallel rectified rig: reference cameras at x_left and x_right, the
// virtual camera at x_virtual between them. Depths share the position units.
struct CameraConfig {
  double focal_px = 0.0;
  double x_left = 0.0;
  double x_right = 0.0;
  double x_virtual = 0.0;
  double z_near = 0.0;
  double z_far = 0.0;

  double baseline_left() const noexcept { return x_virtual - x_left; }
  double baseline_right() const noexcept { return x_right - x_virtual; }
  double baseline() const noexcept { return x_right - x_left; }
  double baseline(ViewSide side) const noexcept {
    return side == ViewSide::left ? baseline_left() : baseline_right();
  }

  // Linear blending weight applied to the left warped view.
  double alpha_blend() const noexcept { return baseline_right() / baseline(); }

  // Throws ConfigError naming the first violated field.
  void validate() const;

  friend bool operator==(const CameraConfig&, const CameraConfig&) = default;
};

}  // namespace vsde
