#pragma once

#include <vector>

#include "vsde/camera.hpp"
#include "vsde/frame.hpp"
#include "vsde/geometry.hpp"

namespace vsde {

// A horizontal depth discontinuity between pixel (x, y) and (x + 1, y).
struct DepthEdge {
  int x = 0;
  int y = 0;
  double z_fg = 0.0;  // nearer of the two metric depths
  double z_bg = 0.0;
  int grad_sign = 0;  // sign of D(x + 1, y) - D(x, y)
  double w_disocc = 0.0;  // f * b * |1/z_fg - 1/z_bg|, pixels

  // Column of the foreground boundary projected into the virtual view.
  double x_virtual = 0.0;

  friend bool operator==(const DepthEdge&, const DepthEdge&) = default;
};

// True when warping `side` toward the virtual view opens a hole at an edge
// with this gradient sign: the left reference shifts right, so holes open
// where the foreground lies to the right of the background (sign > 0); the
// right reference mirrors that.
bool opens_disocclusion(ViewSide side, int grad_sign) noexcept;
inline bool opens_disocclusion(ViewSide side, const DepthEdge& e) noexcept {
  return opens_disocclusion(side, e.grad_sign);
}

// Edge mask: Otsu threshold on the normalized Sobel magnitude of the depth
// map. One DepthEdge per mask pixel whose right neighbour has a different
// depth level, sorted by (y, x). Pairing each pixel with its right
// neighbour counts a step once even though Sobel marks two columns.
std::vector<DepthEdge> detect_depth_edges(const LumaFrame& depth,
                                          const DisparityModel& model,
                                          const CameraConfig& cam);

// Normalized disocclusion area: summed widths of the edges that open holes
// for model.side, divided by the frame area, clamped to 1.
double disocclusion_area(const std::vector<DepthEdge>& edges,
                         const DisparityModel& model, int width, int height);

double estimate_disocclusion_area(const LumaFrame& depth,
                                  const DisparityModel& model,
                                  const CameraConfig& cam);

}  // namespace vsde
