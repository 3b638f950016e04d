#pragma once

#include <optional>

namespace vsde {

// Area fractions of the blended virtual view: both views valid, only the
// left valid, only the right valid, neither valid.
struct RegionProportions {
  double p_overlap = 1.0;
  double p_left = 0.0;
  double p_right = 0.0;
  double p_none = 0.0;

  double sum() const noexcept { return p_overlap + (p_left + p_right + p_none); }

  friend bool operator==(const RegionProportions&,
                         const RegionProportions&) = default;
};

// Per-frame estimate breakdown. Field order is the CSV column order.
struct VsdeReport {
  double e_tex = 0.0;
  double e_ls_left = 0.0;
  double e_ls_right = 0.0;
  double e_ns_left = 0.0;
  double e_ns_right = 0.0;
  double bdi_left = 0.0;
  double bdi_right = 0.0;
  RegionProportions proportions;
  double e_dep = 0.0;
  double e_total = 0.0;
  std::optional<double> oracle_mse;
  // diagnostics
  double nu2_local_left = 0.0;
  double nu2_local_right = 0.0;
  double depth_error_mean_left = 0.0;
  double depth_error_mean_right = 0.0;
  bool proportions_clamped = false;

  friend bool operator==(const VsdeReport&, const VsdeReport&) = default;
};

}  // namespace vsde
