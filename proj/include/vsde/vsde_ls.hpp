#pragma once

#include <complex>
#include <span>
#include <vector>

#include "vsde/camera.hpp"
#include "vsde/frame.hpp"
#include "vsde/geometry.hpp"
#include "vsde/gradient_classify.hpp"

namespace vsde {

// Periodogram |DFT|^2 / (rows * cols) on the full DFT grid. Column index
// c corresponds to horizontal frequency dft_omega(c, cols), row index r to
// the vertical frequency. A row spectrum (rows == 1) holds the row-averaged
// 1D periodogram instead.
struct PowerSpectrum {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;

  double operator()(int r, int c) const noexcept {
    return values[static_cast<std::size_t>(r) * cols + c];
  }
  double mean_power() const noexcept;
};

// Spectrum of the reconstructed texture restricted to LS pixels: NS pixels
// are replaced by the LS mean, the frame mean is removed, then the 2D
// periodogram is taken. Throws DegenerateMask when no pixel is LS.
PowerSpectrum ls_power_spectrum(const LumaFrame& texture_hat,
                                const RegionMask& mask);

// Same preprocessing, but averages the 1D periodograms of the rows. Its
// weighted integral against any omega_1-only factor equals that of the 2D
// periodogram.
PowerSpectrum ls_row_power_spectrum(const LumaFrame& texture_hat,
                                    const RegionMask& mask);

// Mean over all bins of 2 (1 - Re P(omega_1)) * Phi(omega_1, omega_2).
// `char_fn` holds P on the spectrum's column grid.
double ls_base_distortion(const PowerSpectrum& spectrum,
                          std::span<const std::complex<double>> char_fn);

struct BdiWeights {
  double physical = 0.3;
  double disocclusion = 0.4;
  double max_disparity = 0.2;
  double texture = 0.1;
};

// The four normalized large-baseline severity factors of one reference view.
struct BdiFactors {
  double d_phys = 0.0;
  double o_disocc = 0.0;
  double d_maxdisp = 0.0;
  double t_comp = 0.0;
  BdiWeights weights;
};

double texture_complexity(const GradientMaps& texture_grads);

BdiFactors bdi_factors(const LumaFrame& texture, const LumaFrame& depth,
                       const DisparityModel& model, const CameraConfig& cam,
                       const GradientMaps& texture_grads,
                       BdiWeights weights = {});

// Variant for callers that already have the disocclusion area.
BdiFactors bdi_factors(int width, const DisparityModel& model,
                       const CameraConfig& cam,
                       const GradientMaps& texture_grads, double o_disocc,
                       BdiWeights weights = {});

// Baseline distance indicator xi.
double bdi(const BdiFactors& factors);

struct CompensationParams {
  double alpha_comp = 1.5;
  double beta = 10.0;
  double xi_thresh = 0.4;
};

// 1 + alpha_comp * logistic(beta * (xi - xi_thresh)).
double sigmoid_scale(double xi, const CompensationParams& params = {});

double ls_distortion(double base, double xi,
                     const CompensationParams& params = {});

}  // namespace vsde
