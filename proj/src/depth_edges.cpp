#include "vsde/depth_edges.hpp"

#include <algorithm>
#include <cmath>

#include "vsde/gradient_classify.hpp"

namespace vsde {

bool opens_disocclusion(ViewSide side, int grad_sign) noexcept {
  return side == ViewSide::left ? grad_sign > 0 : grad_sign < 0;
}

std::vector<DepthEdge> detect_depth_edges(const LumaFrame& depth,
                                          const DisparityModel& model,
                                          const CameraConfig& cam) {
  const auto grads = sobel_gradients(depth);
  const auto norm = normalize_map(grads.magnitude);
  const double threshold = otsu_threshold(norm);
  const double fb = cam.focal_px * model.baseline;
  const int dir = model.direction();

  std::vector<DepthEdge> edges;
  for (int y = 0; y < depth.height(); ++y) {
    for (int x = 0; x + 1 < depth.width(); ++x) {
      if (!(norm(x, y) > threshold)) continue;
      const int d0 = depth(x, y);
      const int d1 = depth(x + 1, y);
      if (d0 == d1) continue;
      const double z0 = depth_to_metric(d0, cam.z_near, cam.z_far);
      const double z1 = depth_to_metric(d1, cam.z_near, cam.z_far);
      DepthEdge e;
      e.x = x;
      e.y = y;
      e.z_fg = std::min(z0, z1);
      e.z_bg = std::max(z0, z1);
      e.grad_sign = d1 > d0 ? 1 : -1;
      e.w_disocc = fb * std::abs(1.0 / e.z_fg - 1.0 / e.z_bg);
      const double d_fg = std::max(d0, d1);
      e.x_virtual = x + 0.5 + dir * disparity(model, d_fg);
      edges.push_back(e);
    }
  }
  return edges;
}

double disocclusion_area(const std::vector<DepthEdge>& edges,
                         const DisparityModel& model, int width, int height) {
  double sum = 0.0;
  for (const auto& e : edges)
    if (opens_disocclusion(model.side, e)) sum += e.w_disocc;
  const double area = static_cast<double>(width) * height;
  return std::min(1.0, sum / area);
}

double estimate_disocclusion_area(const LumaFrame& depth,
                                  const DisparityModel& model,
                                  const CameraConfig& cam) {
  return disocclusion_area(detect_depth_edges(depth, model, cam), model,
                           depth.width(), depth.height());
}

}  // namespace vsde
