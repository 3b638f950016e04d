#include "vsde/dibr_oracle.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "vsde/errors.hpp"

namespace vsde::oracle {

namespace {

std::atomic<std::uint64_t> g_calls{0};

struct Neighbourhood {
  std::int64_t sum = 0;
  std::int64_t sum_sq = 0;
  std::int64_t depth_sum = 0;
  std::int64_t n = 0;

  void add(int v, int d) {
    sum += v;
    sum_sq += static_cast<std::int64_t>(v) * v;
    depth_sum += d;
    ++n;
  }
  // n^2 * variance, exact.
  std::int64_t scaled_variance() const { return n * sum_sq - sum * sum; }
  int rounded_mean() const {
    return static_cast<int>(std::floor(static_cast<double>(sum) / n + 0.5));
  }
};

// true when a has strictly lower variance; cross-multiplied to stay exact.
bool lower_variance(const Neighbourhood& a, const Neighbourhood& b) {
  return static_cast<__int128>(a.scaled_variance()) * (b.n * b.n) <
         static_cast<__int128>(b.scaled_variance()) * (a.n * a.n);
}

}  // namespace

double RegionLabelMap::fraction(RegionLabel label) const {
  if (labels.empty()) return 0.0;
  std::size_t n = 0;
  for (auto l : labels) n += l == label;
  return static_cast<double>(n) / static_cast<double>(labels.size());
}

int rounded_disparity(const DisparityModel& model, int d) {
  return static_cast<int>(std::floor(disparity(model, d) + 0.5));
}

WarpedView forward_warp(const LumaFrame& texture, const LumaFrame& depth,
                        const DisparityModel& model) {
  g_calls.fetch_add(1, std::memory_order_relaxed);
  require_same_dims(texture, depth, "forward_warp");
  const int w = texture.width(), h = texture.height();
  WarpedView out{LumaFrame(w, h), LumaFrame(w, h), LumaFrame(w, h)};

  int shift[256];
  for (int d = 0; d < 256; ++d) shift[d] = model.direction() * rounded_disparity(model, d);

  // Left view right-to-left, right view left-to-right: sources that move
  // furthest are visited last.
  const bool reverse = model.side == ViewSide::left;
  for (int y = 0; y < h; ++y) {
    for (int i = 0; i < w; ++i) {
      const int xs = reverse ? w - 1 - i : i;
      const int d = depth(xs, y);
      const int xt = xs + shift[d];
      if (xt < 0 || xt >= w) continue;
      if (out.valid(xt, y) && out.depth_buffer(xt, y) > d) continue;
      out.samples(xt, y) = texture(xs, y);
      out.depth_buffer(xt, y) = static_cast<std::uint8_t>(d);
      out.valid(xt, y) = 1;
    }
  }
  return out;
}

BlendResult blend_views(const WarpedView& left, const WarpedView& right,
                        double alpha_blend) {
  require_same_dims(left.samples, right.samples, "blend_views");
  if (!(alpha_blend >= 0.0 && alpha_blend <= 1.0))
    throw std::invalid_argument("blend_views: alpha must lie in [0, 1]");
  const int w = left.samples.width(), h = left.samples.height();
  BlendResult out{LumaFrame(w, h),
                  RegionLabelMap{w, h, std::vector<RegionLabel>(static_cast<std::size_t>(w) * h)},
                  LumaFrame(w, h)};
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const bool lv = left.valid(x, y) != 0, rv = right.valid(x, y) != 0;
      auto& label = out.labels.labels[static_cast<std::size_t>(y) * w + x];
      if (lv && rv) {
        const double v = alpha_blend * left.samples(x, y) +
                         (1.0 - alpha_blend) * right.samples(x, y);
        out.frame(x, y) = static_cast<std::uint8_t>(std::floor(v + 0.5));
        out.depth(x, y) = std::max(left.depth_buffer(x, y), right.depth_buffer(x, y));
        label = RegionLabel::overlap;
      } else if (lv) {
        out.frame(x, y) = left.samples(x, y);
        out.depth(x, y) = left.depth_buffer(x, y);
        label = RegionLabel::left_only;
      } else if (rv) {
        out.frame(x, y) = right.samples(x, y);
        out.depth(x, y) = right.depth_buffer(x, y);
        label = RegionLabel::right_only;
      } else {
        label = RegionLabel::none;
      }
    }
  }
  return out;
}

LumaFrame hole_fill(const LumaFrame& frame, const RegionLabelMap& labels,
                    const LumaFrame& depth, int window) {
  require_same_dims(frame, depth, "hole_fill");
  if (labels.width != frame.width() || labels.height != frame.height() ||
      labels.labels.size() != frame.size())
    throw std::invalid_argument("hole_fill: label map dimension mismatch");
  if (window < 1) throw std::invalid_argument("hole_fill: window must be >= 1");

  const int w = frame.width(), h = frame.height();
  LumaFrame out = frame;
  std::vector<bool> hole(labels.labels.size());
  for (std::size_t i = 0; i < hole.size(); ++i) hole[i] = labels.labels[i] == RegionLabel::none;
  auto is_hole = [&](int x, int y) { return hole[static_cast<std::size_t>(y) * w + x]; };

  std::vector<bool> row_filled(static_cast<std::size_t>(h), true);
  for (int y = 0; y < h; ++y) {
    int x = 0;
    while (x < w) {
      if (!is_hole(x, y)) {
        ++x;
        continue;
      }
      const int run_begin = x;
      while (x < w && is_hole(x, y)) ++x;
      const int run_end = x;  // exclusive

      Neighbourhood left, right;
      for (int xs = run_begin - 1; xs >= 0 && left.n < window; --xs)
        if (!is_hole(xs, y)) left.add(frame(xs, y), depth(xs, y));
      for (int xs = run_end; xs < w && right.n < window; ++xs)
        if (!is_hole(xs, y)) right.add(frame(xs, y), depth(xs, y));

      const Neighbourhood* src = nullptr;
      if (left.n == 0 && right.n == 0) {
        row_filled[static_cast<std::size_t>(y)] = false;
        continue;
      } else if (left.n == 0) {
        src = &right;
      } else if (right.n == 0) {
        src = &left;
      } else if (lower_variance(left, right)) {
        src = &left;
      } else if (lower_variance(right, left)) {
        src = &right;
      } else {
        // Equal variance: prefer the background (smaller mean depth level).
        const auto l = static_cast<__int128>(left.depth_sum) * right.n;
        const auto r = static_cast<__int128>(right.depth_sum) * left.n;
        src = r < l ? &right : &left;
      }
      const auto v = static_cast<std::uint8_t>(src->rounded_mean());
      for (int xf = run_begin; xf < run_end; ++xf) out(xf, y) = v;
    }
  }

  bool any = false;
  for (int y = 0; y < h; ++y) any = any || row_filled[static_cast<std::size_t>(y)];
  if (!any) throw CannotFill("hole_fill: frame has no valid pixel");

  // Rows without any valid pixel copy the nearest filled row, upward first.
  for (int y = 0; y < h; ++y) {
    if (row_filled[static_cast<std::size_t>(y)]) continue;
    int src = -1;
    for (int dy = 1; src < 0; ++dy) {
      if (y - dy >= 0 && row_filled[static_cast<std::size_t>(y - dy)]) src = y - dy;
      else if (y + dy < h && row_filled[static_cast<std::size_t>(y + dy)]) src = y + dy;
    }
    for (int x = 0; x < w; ++x) out(x, y) = out(x, src);
  }
  return out;
}

SynthesisResult synthesize(const LumaFrame& tl, const LumaFrame& dl,
                           const LumaFrame& tr, const LumaFrame& dr,
                           const CameraConfig& cam) {
  g_calls.fetch_add(1, std::memory_order_relaxed);
  require_same_dims(tl, dl, "synthesize");
  require_same_dims(tl, tr, "synthesize");
  require_same_dims(tl, dr, "synthesize");
  cam.validate();
  const auto left = forward_warp(tl, dl, disparity_model(cam, ViewSide::left));
  const auto right = forward_warp(tr, dr, disparity_model(cam, ViewSide::right));
  auto blended = blend_views(left, right, cam.alpha_blend());
  auto view = hole_fill(blended.frame, blended.labels, blended.depth);
  return {std::move(view), std::move(blended.labels)};
}

std::uint64_t call_count() noexcept { return g_calls.load(std::memory_order_relaxed); }

}  // namespace vsde::oracle
