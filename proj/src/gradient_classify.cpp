#include "vsde/gradient_classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vsde/kernels.hpp"

namespace vsde {

RegionMask::RegionMask(int width, int height, Region fill)
    : width_(width), height_(height) {
  if (width <= 0 || height <= 0)
    throw std::invalid_argument("region mask: dimensions must be positive");
  labels_.assign(static_cast<std::size_t>(width) * height, fill);
  (fill == Region::ns ? ns_count_ : ls_count_) = labels_.size();
}

RegionMask::RegionMask(int width, int height, std::vector<Region> labels)
    : width_(width), height_(height), labels_(std::move(labels)) {
  if (width <= 0 || height <= 0 ||
      labels_.size() != static_cast<std::size_t>(width) * height)
    throw std::invalid_argument("region mask: label count does not match dims");
  ns_count_ = static_cast<std::size_t>(
      std::count(labels_.begin(), labels_.end(), Region::ns));
  ls_count_ = labels_.size() - ns_count_;
}

void RegionMask::set(int x, int y, Region r) {
  auto& cell = labels_[static_cast<std::size_t>(y) * width_ + x];
  if (cell == r) return;
  if (r == Region::ns) {
    ++ns_count_;
    --ls_count_;
  } else {
    --ns_count_;
    ++ls_count_;
  }
  cell = r;
}

std::vector<std::size_t> RegionMask::ns_indices() const {
  std::vector<std::size_t> out;
  out.reserve(ns_count_);
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == Region::ns) out.push_back(i);
  return out;
}

GradientMaps sobel_gradients(const LumaFrame& frame) {
  auto maps = kernels::parallel::sobel(frame);
  return {std::move(maps.gx), std::move(maps.gy), std::move(maps.magnitude)};
}

RealMap normalize_map(const RealMap& map) {
  RealMap out(map.width(), map.height(), 0.0);
  const auto [lo, hi] = std::minmax_element(map.samples().begin(),
                                            map.samples().end());
  const double range = *hi - *lo;
  if (!(range > 0.0)) return out;
  auto dst = out.samples();
  auto src = map.samples();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = (src[i] - *lo) / range;
  return out;
}

RealMap joint_edge_map(const RealMap& gt_norm, const RealMap& gd_norm,
                       JemWeights weights) {
  require_same_dims(gt_norm, gd_norm, "joint_edge_map");
  RealMap out(gt_norm.width(), gt_norm.height());
  auto dst = out.samples();
  auto gt = gt_norm.samples();
  auto gd = gd_norm.samples();
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] = weights.depth * gd[i] + weights.texture * gt[i] * (1.0 - gd[i]);
  return out;
}

int otsu_bin(double value) noexcept {
  const double scaled = std::round(value * (kOtsuBins - 1));
  if (!(scaled > 0.0)) return 0;
  if (scaled >= kOtsuBins - 1) return kOtsuBins - 1;
  return static_cast<int>(scaled);
}

std::vector<std::uint64_t> otsu_histogram(std::span<const double> values) {
  std::vector<std::uint64_t> hist(kOtsuBins, 0);
  for (const double v : values) ++hist[otsu_bin(v)];
  return hist;
}

int otsu_bin_threshold(std::span<const std::uint64_t> histogram) {
  if (histogram.size() != kOtsuBins)
    throw std::invalid_argument("otsu: histogram must have 256 bins");
  // Integer running sums keep every class statistic exact; the score is
  // (N*S0 - N0*S)^2 / (N0*N1), proportional to between-class variance.
  std::int64_t total = 0, total_sum = 0;
  int occupied = 0, last_occupied = 0;
  for (int i = 0; i < kOtsuBins; ++i) {
    const auto h = static_cast<std::int64_t>(histogram[i]);
    total += h;
    total_sum += h * i;
    if (h > 0) {
      ++occupied;
      last_occupied = i;
    }
  }
  if (occupied <= 1) return last_occupied;

  std::int64_t n0 = 0, s0 = 0;
  int best = 0;
  double best_score = -1.0;
  for (int t = 0; t < kOtsuBins - 1; ++t) {
    const auto h = static_cast<std::int64_t>(histogram[t]);
    n0 += h;
    s0 += h * t;
    const std::int64_t n1 = total - n0;
    if (n0 == 0 || n1 == 0) continue;
    const double num = static_cast<double>(total * s0 - n0 * total_sum);
    const double score = num * num /
                         (static_cast<double>(n0) * static_cast<double>(n1));
    if (score > best_score) {
      best_score = score;
      best = t;
    }
  }
  return best;
}

double otsu_threshold(std::span<const double> values) {
  if (values.empty()) return 0.0;
  const int t = otsu_bin_threshold(otsu_histogram(values));
  double threshold = -std::numeric_limits<double>::infinity();
  for (const double v : values)
    if (otsu_bin(v) <= t) threshold = std::max(threshold, v);
  return threshold;
}

RegionMask classify_ls_ns(const RealMap& jem, double threshold) {
  std::vector<Region> labels(jem.size());
  auto src = jem.samples();
  for (std::size_t i = 0; i < labels.size(); ++i)
    labels[i] = src[i] > threshold ? Region::ns : Region::ls;
  return RegionMask(jem.width(), jem.height(), std::move(labels));
}

std::vector<double> second_derivative_x(const LumaFrame& frame,
                                        const RegionMask& mask) {
  if (!frame.same_dims(mask.width(), mask.height()))
    throw std::invalid_argument("second_derivative_x: dimension mismatch");
  const auto indices = mask.ns_indices();
  std::vector<double> out(indices.size());
  const int w = frame.width();
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const int x = static_cast<int>(indices[k] % w);
    const int y = static_cast<int>(indices[k] / w);
    out[k] = static_cast<double>(frame.clamped(x + 1, y)) -
             2.0 * static_cast<double>(frame(x, y)) +
             static_cast<double>(frame.clamped(x - 1, y));
  }
  return out;
}

ViewClassification classify_view(const LumaFrame& texture,
                                 const LumaFrame& depth, JemWeights weights) {
  require_same_dims(texture, depth, "classify_view");
  ViewClassification out;
  out.texture_gradients = sobel_gradients(texture);
  out.depth_gradients = sobel_gradients(depth);
  out.jem = joint_edge_map(normalize_map(out.texture_gradients.magnitude),
                           normalize_map(out.depth_gradients.magnitude),
                           weights);
  out.threshold = otsu_threshold(out.jem);
  out.mask = classify_ls_ns(out.jem, out.threshold);
  return out;
}

LumaFrame mask_to_frame(const RegionMask& mask) {
  LumaFrame out(mask.width(), mask.height());
  auto dst = out.samples();
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] = mask.at(i) == Region::ns ? 255 : 0;
  return out;
}

}  // namespace vsde
