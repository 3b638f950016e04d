#include "vsde/estimator.hpp"

#include "vsde/depth_edges.hpp"
#include "vsde/errors.hpp"
#include "vsde/geometry.hpp"
#include "vsde/vsde_ns.hpp"

namespace vsde {

ViewEstimate estimate_view(const ViewPair& view, const CameraConfig& cam,
                           ViewSide side, const EstimatorParams& params) {
  require_same_dims(view.texture, view.depth, "estimate_view");
  require_same_dims(view.texture, view.texture_hat, "estimate_view");
  require_same_dims(view.texture, view.depth_hat, "estimate_view");

  const auto model = disparity_model(cam, side);
  const auto cls = classify_view(view.texture, view.depth, params.jem);
  const auto stats = depth_error_stats(view.depth, view.depth_hat, model);

  ViewEstimate out;
  out.ls_count = cls.mask.ls_count();
  out.ns_count = cls.mask.ns_count();
  out.depth_error_mean = stats.mean;
  out.depth_exact = stats.probability(0) == 1.0;
  out.disparity_variance = stats.disparity_variance;
  out.edges = detect_depth_edges(view.depth, model, cam);
  out.o_disocc = disocclusion_area(out.edges, model, view.depth.width(),
                                   view.depth.height());
  out.factors = bdi_factors(view.texture.width(), model, cam,
                            cls.texture_gradients, out.o_disocc, params.bdi);
  out.xi = bdi(out.factors);
  out.nu2_local = local_variance_near_edges(view.texture, out.edges,
                                            params.local_variance_radius);

  if (out.ls_count > 0) {
    const auto spectrum = params.row_psd
                              ? ls_row_power_spectrum(view.texture_hat, cls.mask)
                              : ls_power_spectrum(view.texture_hat, cls.mask);
    const auto p = char_fn_on_grid(stats, model, spectrum.cols);
    out.e_ls_base = ls_base_distortion(spectrum, p);
    out.e_ls = params.compensate
                   ? ls_distortion(out.e_ls_base, out.xi, params.compensation)
                   : out.e_ls_base;
  }

  if (out.ns_count > 0) {
    const auto grads_hat = sobel_gradients(view.texture_hat);
    const auto curvature = second_derivative_x(view.texture_hat, cls.mask);
    out.e_ns = ns_distortion(view.texture_hat, cls.mask, grads_hat.gx,
                             curvature, stats.disparity_variance)
                   .value;
  }

  out.e_dep = single_view_depth_vsd(out.e_ls, out.e_ns, out.ls_count, out.ns_count);
  return out;
}

VsdeReport estimate_frame(const LumaFrame& tl, const LumaFrame& dl,
                          const LumaFrame& tr, const LumaFrame& dr,
                          const LumaFrame& tl_hat, const LumaFrame& dl_hat,
                          const LumaFrame& tr_hat, const LumaFrame& dr_hat,
                          const CameraConfig& cam,
                          const EstimatorParams& params) {
  cam.validate();
  require_same_dims(tl, tr, "estimate_frame");
  const double alpha = cam.alpha_blend();

  const auto left = estimate_view({tl, dl, tl_hat, dl_hat}, cam, ViewSide::left, params);
  const auto right = estimate_view({tr, dr, tr_hat, dr_hat}, cam, ViewSide::right, params);

  const auto matches = match_edges(left.edges, right.edges, params.match);
  const auto props = region_proportions(left.edges, right.edges, matches,
                                        tl.width(), tl.height(), left.o_disocc,
                                        right.o_disocc);

  VsdeReport r;
  r.e_tex = texture_vsd(tl, tl_hat, tr, tr_hat, alpha);
  r.e_ls_left = left.e_ls;
  r.e_ls_right = right.e_ls;
  r.e_ns_left = left.e_ns;
  r.e_ns_right = right.e_ns;
  r.bdi_left = left.xi;
  r.bdi_right = right.xi;
  r.proportions = props.proportions;
  // Hole filling reproduces the same values from exact depth, so the
  // mutual-disocclusion term only counts once some depth level changed.
  const bool depth_exact = left.depth_exact && right.depth_exact;
  r.e_dep = blended_depth_vsd(left.e_dep, right.e_dep, props.proportions, alpha,
                              depth_exact ? 0.0 : left.nu2_local,
                              depth_exact ? 0.0 : right.nu2_local);
  r.e_total = total_vsd(r.e_tex, r.e_dep);
  r.nu2_local_left = left.nu2_local;
  r.nu2_local_right = right.nu2_local;
  r.depth_error_mean_left = left.depth_error_mean;
  r.depth_error_mean_right = right.depth_error_mean;
  r.proportions_clamped = props.clamped;
  return r;
}

}  // namespace vsde
