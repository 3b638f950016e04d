#include "vsde/vsde_blend.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "vsde/metrics.hpp"

namespace vsde {

double texture_vsd(const LumaFrame& tl, const LumaFrame& tl_hat,
                   const LumaFrame& tr, const LumaFrame& tr_hat,
                   double alpha_blend) {
  require_same_dims(tl, tr, "texture_vsd");
  const double a = alpha_blend;
  return a * a * mse(tl, tl_hat) + (1.0 - a) * (1.0 - a) * mse(tr, tr_hat);
}

double single_view_depth_vsd(double e_ls, double e_ns, std::size_t ls_count,
                             std::size_t ns_count) {
  const std::size_t total = ls_count + ns_count;
  if (total == 0) return 0.0;
  if (ns_count == 0) return e_ls;
  if (ls_count == 0) return e_ns;
  const double n = static_cast<double>(total);
  return static_cast<double>(ls_count) / n * e_ls +
         static_cast<double>(ns_count) / n * e_ns;
}

std::vector<EdgeMatch> match_edges(const std::vector<DepthEdge>& edges_l,
                                   const std::vector<DepthEdge>& edges_r,
                                   MatchParams params) {
  if (params.tau_spatial < 0.0 || params.tau_vertical < 0.0)
    throw std::invalid_argument("match_edges: thresholds must be >= 0");

  // Right edges bucketed by row; the vertical window is a few rows at most.
  int max_y = -1;
  for (const auto& e : edges_r) max_y = std::max(max_y, e.y);
  std::vector<std::vector<std::size_t>> by_row(static_cast<std::size_t>(max_y + 1));
  for (std::size_t j = 0; j < edges_r.size(); ++j)
    by_row[static_cast<std::size_t>(edges_r[j].y)].push_back(j);

  const int reach = static_cast<int>(std::ceil(params.tau_vertical)) - 1;
  struct Candidate {
    double dx;
    std::size_t i, j;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < edges_l.size(); ++i) {
    const auto& l = edges_l[i];
    for (int y = l.y - std::max(reach, 0); y <= l.y + std::max(reach, 0); ++y) {
      if (y < 0 || y > max_y) continue;
      if (!(std::abs(y - l.y) < params.tau_vertical)) continue;
      for (std::size_t j : by_row[static_cast<std::size_t>(y)]) {
        const double dx = std::abs(l.x_virtual - edges_r[j].x_virtual);
        if (dx < params.tau_spatial) candidates.push_back({dx, i, j});
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              return std::tie(a.dx, a.i, a.j) < std::tie(b.dx, b.i, b.j);
            });

  std::vector<bool> used_l(edges_l.size()), used_r(edges_r.size());
  std::vector<EdgeMatch> out;
  for (const auto& c : candidates) {
    if (used_l[c.i] || used_r[c.j]) continue;
    used_l[c.i] = used_r[c.j] = true;
    out.emplace_back(c.i, c.j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

constexpr double kProportionGrid = 4294967296.0;  // 2^32

double snap(double p) {
  return std::round(std::clamp(p, 0.0, 1.0) * kProportionGrid) / kProportionGrid;
}

}  // namespace

ProportionEstimate region_proportions(const std::vector<DepthEdge>& edges_l,
                                      const std::vector<DepthEdge>& edges_r,
                                      const std::vector<EdgeMatch>& matches,
                                      int width, int height, double o_disocc_l,
                                      double o_disocc_r) {
  if (width <= 0 || height <= 0)
    throw std::invalid_argument("region_proportions: dimensions must be positive");
  double overlap_width = 0.0;
  for (const auto& [i, j] : matches) {
    const auto& l = edges_l.at(i);
    const auto& r = edges_r.at(j);
    if (l.grad_sign != r.grad_sign) overlap_width += std::min(l.w_disocc, r.w_disocc);
  }
  double p_left = std::clamp(o_disocc_r, 0.0, 1.0);
  double p_right = std::clamp(o_disocc_l, 0.0, 1.0);
  double p_none = overlap_width / (static_cast<double>(width) * height);

  ProportionEstimate out;
  const double raw = p_left + p_right + p_none;
  if (raw > 1.0) {
    out.clamped = true;
    p_left /= raw;
    p_right /= raw;
    p_none /= raw;
  }
  auto& p = out.proportions;
  p.p_left = snap(p_left);
  p.p_right = snap(p_right);
  p.p_none = snap(p_none);
  // Snapping can push the renormalized sum one grid step past 1.
  if (p.p_left + p.p_right + p.p_none > 1.0) p.p_none = 1.0 - p.p_left - p.p_right;
  if (p.p_none < 0.0) {
    p.p_none = 0.0;
    p.p_right = 1.0 - p.p_left;
  }
  p.p_overlap = 1.0 - (p.p_left + p.p_right + p.p_none);
  return out;
}

double local_variance_near_edges(const LumaFrame& texture,
                                 const std::vector<DepthEdge>& edges,
                                 int radius) {
  if (radius < 0) throw std::invalid_argument("local variance: negative radius");
  if (edges.empty()) return 0.0;
  double total = 0.0;
  for (const auto& e : edges) {
    const int x0 = std::max(0, e.x - radius), x1 = std::min(texture.width() - 1, e.x + radius);
    const int y0 = std::max(0, e.y - radius), y1 = std::min(texture.height() - 1, e.y + radius);
    std::int64_t s = 0, s2 = 0, n = 0;
    for (int y = y0; y <= y1; ++y)
      for (int x = x0; x <= x1; ++x) {
        const int v = texture(x, y);
        s += v;
        s2 += v * v;
        ++n;
      }
    const double nd = static_cast<double>(n);
    // n * s2 - s^2 is exact in integers.
    total += static_cast<double>(n * s2 - s * s) / (nd * nd);
  }
  return total / static_cast<double>(edges.size());
}

double blended_depth_vsd(double e_dep_l, double e_dep_r,
                         const RegionProportions& props, double alpha_blend,
                         double nu2_local_l, double nu2_local_r) {
  const double a = alpha_blend;
  return props.p_overlap * (a * a * e_dep_l + (1.0 - a) * (1.0 - a) * e_dep_r) +
         props.p_left * e_dep_l + props.p_right * e_dep_r +
         props.p_none * 0.5 * (nu2_local_l + nu2_local_r);
}

}  // namespace vsde
