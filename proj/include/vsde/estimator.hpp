#pragma once

#include "vsde/camera.hpp"
#include "vsde/frame.hpp"
#include "vsde/gradient_classify.hpp"
#include "vsde/report.hpp"
#include "vsde/vsde_blend.hpp"
#include "vsde/vsde_ls.hpp"

namespace vsde {

struct EstimatorParams {
  JemWeights jem;
  BdiWeights bdi;
  CompensationParams compensation;
  bool compensate = true;  // apply the sigmoid scale to the LS term
  MatchParams match;
  int local_variance_radius = kLocalVarianceRadius;
  bool row_psd = false;  // 1D row-spectrum fast path for the LS term
};

// Reference views (t = texture, d = depth) with their decoded counterparts.
struct ViewPair {
  const LumaFrame& texture;
  const LumaFrame& depth;
  const LumaFrame& texture_hat;
  const LumaFrame& depth_hat;
};

// Per-view intermediate results, exposed for diagnostics and tests.
struct ViewEstimate {
  double e_ls = 0.0;  // compensated
  double e_ls_base = 0.0;
  double e_ns = 0.0;
  double e_dep = 0.0;
  double xi = 0.0;
  BdiFactors factors;
  double o_disocc = 0.0;
  double nu2_local = 0.0;
  double depth_error_mean = 0.0;
  bool depth_exact = true;  // decoded depth equals the original everywhere
  double disparity_variance = 0.0;
  std::size_t ls_count = 0;
  std::size_t ns_count = 0;
  std::vector<DepthEdge> edges;
};

ViewEstimate estimate_view(const ViewPair& view, const CameraConfig& cam,
                           ViewSide side, const EstimatorParams& params = {});

// Full frame estimate from the two reference views; never renders.
VsdeReport estimate_frame(const LumaFrame& tl, const LumaFrame& dl,
                          const LumaFrame& tr, const LumaFrame& dr,
                          const LumaFrame& tl_hat, const LumaFrame& dl_hat,
                          const LumaFrame& tr_hat, const LumaFrame& dr_hat,
                          const CameraConfig& cam,
                          const EstimatorParams& params = {});

}  // namespace vsde
