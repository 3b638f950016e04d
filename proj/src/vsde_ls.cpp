#include "vsde/vsde_ls.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include <fftw3.h>

#include "vsde/depth_edges.hpp"
#include "vsde/errors.hpp"
#include "vsde/kernels.hpp"

namespace vsde {

namespace {

// FFTW planning is not thread safe.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};
template <class T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

template <class T>
FftwBuffer<T> fftw_alloc(std::size_t n) {
  auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * n));
  if (!p) throw std::bad_alloc();
  return FftwBuffer<T>(p);
}

class Plan {
 public:
  explicit Plan(fftw_plan plan) : plan_(plan) {
    if (!plan_) throw std::runtime_error("fftw: planning failed");
  }
  ~Plan() {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(plan_);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

// Zero-mean real frame with NS pixels replaced by the LS mean.
FftwBuffer<double> ls_prepared_frame(const LumaFrame& texture_hat,
                                     const RegionMask& mask) {
  if (!texture_hat.same_dims(mask.width(), mask.height()))
    throw std::invalid_argument("ls spectrum: mask dimension mismatch");
  if (mask.ls_count() == 0)
    throw DegenerateMask("ls spectrum: mask has no LS pixels");

  const auto src = texture_hat.samples();
  std::uint64_t ls_sum = 0;
  for (std::size_t i = 0; i < src.size(); ++i)
    if (mask.at(i) == Region::ls) ls_sum += src[i];
  const double ls_mean =
      static_cast<double>(ls_sum) / static_cast<double>(mask.ls_count());

  // After filling, the frame mean equals the LS mean.
  auto buf = fftw_alloc<double>(src.size());
  for (std::size_t i = 0; i < src.size(); ++i)
    buf[i] = mask.at(i) == Region::ls ? src[i] - ls_mean : 0.0;
  return buf;
}

}  // namespace

double PowerSpectrum::mean_power() const noexcept {
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

PowerSpectrum ls_power_spectrum(const LumaFrame& texture_hat,
                                const RegionMask& mask) {
  const int w = texture_hat.width(), h = texture_hat.height();
  auto in = ls_prepared_frame(texture_hat, mask);
  const int half = w / 2 + 1;
  auto out = fftw_alloc<fftw_complex>(static_cast<std::size_t>(h) * half);
  std::unique_ptr<Plan> plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan = std::make_unique<Plan>(
        fftw_plan_dft_r2c_2d(h, w, in.get(), out.get(), FFTW_ESTIMATE));
  }
  plan->execute();

  PowerSpectrum spec{h, w, std::vector<double>(static_cast<std::size_t>(h) * w)};
  const double norm = 1.0 / (static_cast<double>(w) * h);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < half; ++c) {
      const auto& z = out[static_cast<std::size_t>(r) * half + c];
      const double p = (z[0] * z[0] + z[1] * z[1]) * norm;
      spec.values[static_cast<std::size_t>(r) * w + c] = p;
      // Hermitian symmetry fills the other half: X(r, c) = X*(-r, -c).
      const int rc = (h - r) % h;
      const int cc = (w - c) % w;
      spec.values[static_cast<std::size_t>(rc) * w + cc] = p;
    }
  }
  return spec;
}

PowerSpectrum ls_row_power_spectrum(const LumaFrame& texture_hat,
                                    const RegionMask& mask) {
  const int w = texture_hat.width(), h = texture_hat.height();
  auto in = ls_prepared_frame(texture_hat, mask);
  const int half = w / 2 + 1;
  auto out = fftw_alloc<fftw_complex>(static_cast<std::size_t>(h) * half);
  std::unique_ptr<Plan> plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    int n[] = {w};
    plan = std::make_unique<Plan>(fftw_plan_many_dft_r2c(
        1, n, h, in.get(), nullptr, 1, w, out.get(), nullptr, 1, half,
        FFTW_ESTIMATE));
  }
  plan->execute();

  PowerSpectrum spec{1, w, std::vector<double>(static_cast<std::size_t>(w), 0.0)};
  const double norm = 1.0 / (static_cast<double>(w) * h);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < half; ++c) {
      const auto& z = out[static_cast<std::size_t>(r) * half + c];
      const double p = (z[0] * z[0] + z[1] * z[1]) * norm;
      spec.values[c] += p;
      if (const int cc = (w - c) % w; cc != c) spec.values[cc] += p;
    }
  }
  return spec;
}

double ls_base_distortion(const PowerSpectrum& spectrum,
                          std::span<const std::complex<double>> char_fn) {
  if (char_fn.size() != static_cast<std::size_t>(spectrum.cols))
    throw std::invalid_argument(
        "ls_base_distortion: characteristic function grid does not match "
        "spectrum columns");
  std::vector<double> weight(char_fn.size());
  for (std::size_t c = 0; c < weight.size(); ++c)
    weight[c] = 2.0 * (1.0 - char_fn[c].real());
  const double sum = kernels::parallel::column_weighted_sum(
      spectrum.values, spectrum.rows, spectrum.cols, weight);
  return std::max(0.0, sum / (static_cast<double>(spectrum.rows) * spectrum.cols));
}

double texture_complexity(const GradientMaps& texture_grads) {
  const auto mag = texture_grads.magnitude.samples();
  if (mag.empty()) return 0.0;
  const double mean =
      std::accumulate(mag.begin(), mag.end(), 0.0) / static_cast<double>(mag.size());
  std::vector<double> sorted(mag.begin(), mag.end());
  const auto k = static_cast<std::size_t>(0.9 * static_cast<double>(sorted.size() - 1));
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k),
                   sorted.end());
  const double p90 = sorted[k];
  if (!(p90 > 0.0)) return mean > 0.0 ? 1.0 : 0.0;
  return std::min(mean / p90, 1.0);
}

BdiFactors bdi_factors(int width, const DisparityModel& model,
                       const CameraConfig& cam,
                       const GradientMaps& texture_grads, double o_disocc,
                       BdiWeights weights) {
  BdiFactors f;
  f.weights = weights;
  f.d_phys = std::min(model.baseline / cam.z_near, 1.0);
  f.o_disocc = std::clamp(o_disocc, 0.0, 1.0);
  f.d_maxdisp = std::min((model.k * 255.0 + model.c) / width, 1.0);
  f.t_comp = texture_complexity(texture_grads);
  return f;
}

BdiFactors bdi_factors(const LumaFrame& texture, const LumaFrame& depth,
                       const DisparityModel& model, const CameraConfig& cam,
                       const GradientMaps& texture_grads, BdiWeights weights) {
  require_same_dims(texture, depth, "bdi_factors");
  return bdi_factors(texture.width(), model, cam, texture_grads,
                     estimate_disocclusion_area(depth, model, cam), weights);
}

double bdi(const BdiFactors& f) {
  const auto& w = f.weights;
  return w.physical * f.d_phys + w.disocclusion * f.o_disocc +
         w.max_disparity * f.d_maxdisp + w.texture * f.t_comp;
}

double sigmoid_scale(double xi, const CompensationParams& params) {
  const double logistic = 1.0 / (1.0 + std::exp(-params.beta * (xi - params.xi_thresh)));
  return 1.0 + params.alpha_comp * logistic;
}

double ls_distortion(double base, double xi, const CompensationParams& params) {
  return base * sigmoid_scale(xi, params);
}

}  // namespace vsde
