#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "vsde/depth_edges.hpp"
#include "vsde/frame.hpp"
#include "vsde/geometry.hpp"
#include "vsde/report.hpp"

namespace vsde {

// alpha^2 * mse(tl, tl_hat) + (1 - alpha)^2 * mse(tr, tr_hat).
double texture_vsd(const LumaFrame& tl, const LumaFrame& tl_hat,
                   const LumaFrame& tr, const LumaFrame& tr_hat,
                   double alpha_blend);

// Area-weighted combination of the LS and NS estimates of one view.
double single_view_depth_vsd(double e_ls, double e_ns, std::size_t ls_count,
                             std::size_t ns_count);

struct MatchParams {
  double tau_spatial = 2.0;
  double tau_vertical = 1.0;
};

// (index into left list, index into right list)
using EdgeMatch = std::pair<std::size_t, std::size_t>;

// Greedy matching on projected virtual-view columns: all candidate pairs
// with |dx_virtual| < tau_spatial and |dy| < tau_vertical are taken in
// order of increasing |dx_virtual| (ties by left then right edge index),
// each edge at most once. Result is sorted by left index.
std::vector<EdgeMatch> match_edges(const std::vector<DepthEdge>& edges_l,
                                   const std::vector<DepthEdge>& edges_r,
                                   MatchParams params = {});

struct ProportionEstimate {
  RegionProportions proportions;
  bool clamped = false;  // p_overlap went negative and was renormalized
};

// p_left = o_disocc_r, p_right = o_disocc_l, p_none from matched edges with
// opposing gradient signs, p_overlap by complement. The three estimated
// fractions are snapped to multiples of 2^-32 so that the four sum to 1
// exactly in floating point.
ProportionEstimate region_proportions(const std::vector<DepthEdge>& edges_l,
                                      const std::vector<DepthEdge>& edges_r,
                                      const std::vector<EdgeMatch>& matches,
                                      int width, int height, double o_disocc_l,
                                      double o_disocc_r);

inline constexpr int kLocalVarianceRadius = 3;

// Mean over edges of the population variance of the texture window of
// radius `radius` around the edge pixel, cropped at the frame border.
double local_variance_near_edges(const LumaFrame& texture,
                                 const std::vector<DepthEdge>& edges,
                                 int radius = kLocalVarianceRadius);

double blended_depth_vsd(double e_dep_l, double e_dep_r,
                         const RegionProportions& props, double alpha_blend,
                         double nu2_local_l, double nu2_local_r);

inline double total_vsd(double e_tex, double e_dep) { return e_tex + e_dep; }

}  // namespace vsde
