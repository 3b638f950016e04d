#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vsde/camera.hpp"
#include "vsde/estimator.hpp"
#include "vsde/noise.hpp"
#include "vsde/report.hpp"
#include "vsde/scene.hpp"

namespace vsde::harness {

struct ValidationCase {
  std::string name;
  SceneSpec scene;
  NoiseSpec noise;
  CameraConfig camera;
};

struct ValidationSummary {
  double pcc = 0.0;
  double rmse = 0.0;
  std::size_t n_cases = 0;
  double median_relative_error = 0.0;
};

struct CaseResult {
  std::string name;
  VsdeReport report;  // oracle_mse always set
};

struct ValidationResult {
  ValidationSummary summary;
  std::vector<CaseResult> cases;
};

// Reference views and their noisy counterparts for one case. Each of the
// four frames draws noise from its own stream derived from noise.seed.
struct CaseFrames {
  SceneViews original;
  SceneViews decoded;
};
CaseFrames make_case_frames(const ValidationCase& c);

// Estimate and oracle MSE (synthesis from original vs decoded references).
CaseResult run_case(const ValidationCase& c, const EstimatorParams& params = {});

// Pearson correlation, RMSE and median |estimate - actual| / actual.
// A zero actual counts as relative error 0 when the estimate is also 0 and
// as infinity otherwise. Throws std::invalid_argument for fewer than two
// cases or mismatched lengths.
ValidationSummary summarize(std::span<const double> estimates,
                            std::span<const double> actuals);

ValidationResult validate_run(const std::vector<ValidationCase>& cases,
                              const EstimatorParams& params = {});

// JSON manifest: {"cases": [{"name", "scene", "noise", "camera"}]}.
// Seeds are mandatory.
std::vector<ValidationCase> parse_case_manifest(const std::string& text);
std::string format_case_manifest(const std::vector<ValidationCase>& cases);

// A single scene description: {"scene": {...}, "camera": {...}}.
struct SceneManifest {
  SceneSpec scene;
  CameraConfig camera;
};
SceneManifest parse_scene_manifest(const std::string& text);

// Per-case rows followed by one summary row.
std::string format_validation_csv(const ValidationResult& result);

}  // namespace vsde::harness
