#include "vsde/scene.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "vsde/dibr_oracle.hpp"
#include "vsde/geometry.hpp"
#include "vsde/noise.hpp"

namespace vsde::harness {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<double> gaussian_kernel(double sigma) {
  const int r = std::max(1, static_cast<int>(std::ceil(4.0 * sigma)));
  std::vector<double> k(static_cast<std::size_t>(2 * r + 1));
  double sum = 0.0;
  for (int i = -r; i <= r; ++i) {
    k[static_cast<std::size_t>(i + r)] = std::exp(-0.5 * i * i / (sigma * sigma));
    sum += k[static_cast<std::size_t>(i + r)];
  }
  for (auto& v : k) v /= sum;
  return k;
}

// Pattern value of a texture at left-view column u, row y, before the
// layer-independent mean is added.
class LayerTexture {
 public:
  LayerTexture(const TextureSpec& spec, int u_min, int width, int height,
               int x_begin, std::uint64_t seed)
      : spec_(spec), u_min_(u_min), x_begin_(x_begin) {
    if (spec.kind == TextureKind::filtered_noise)
      field_ = filtered_noise_field(width - u_min, height, spec.cutoff, seed);
  }

  double operator()(int u, int y) const {
    const auto& s = spec_;
    double v = s.mean;
    switch (s.kind) {
      case TextureKind::flat:
        break;
      case TextureKind::ramp:
        v += s.slope * (u - x_begin_);
        break;
      case TextureKind::sine:
        v += s.amplitude *
             std::sin(2.0 * std::numbers::pi * (s.frequency * u + s.frequency_y * y));
        break;
      case TextureKind::filtered_noise:
        v += s.amplitude * field_(u - u_min_, y);
        break;
      case TextureKind::checker: {
        const int cu = static_cast<int>(std::floor(static_cast<double>(u) / s.period));
        const int cy = y / s.period;
        v += ((cu + cy) & 1) ? s.amplitude : -s.amplitude;
        break;
      }
    }
    return v;
  }

 private:
  TextureSpec spec_;
  int u_min_;
  int x_begin_;
  RealMap field_;
};

std::uint8_t to_luma(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
}

}  // namespace

TextureKind parse_texture_kind(const std::string& name) {
  if (name == "flat") return TextureKind::flat;
  if (name == "ramp") return TextureKind::ramp;
  if (name == "sine") return TextureKind::sine;
  if (name == "filtered-noise" || name == "noise") return TextureKind::filtered_noise;
  if (name == "checker") return TextureKind::checker;
  throw std::invalid_argument("unknown texture kind '" + name + "'");
}

std::string to_string(TextureKind kind) {
  switch (kind) {
    case TextureKind::flat: return "flat";
    case TextureKind::ramp: return "ramp";
    case TextureKind::sine: return "sine";
    case TextureKind::filtered_noise: return "filtered-noise";
    case TextureKind::checker: return "checker";
  }
  return "flat";
}

void SceneSpec::validate() const {
  if (width < 8 || height < 8)
    throw std::invalid_argument("scene: frame must be at least 8x8");
  if (layers.empty()) throw std::invalid_argument("scene: no layers");
  int prev_depth = -1;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const auto& l = layers[i];
    const std::string where = "scene layer " + std::to_string(i) + ": ";
    if (l.depth_level < 0 || l.depth_level > 255)
      throw std::invalid_argument(where + "depth level outside [0, 255]");
    if (l.depth_level < prev_depth)
      throw std::invalid_argument(where + "layers must be ordered back to front");
    prev_depth = l.depth_level;
    if (l.x_begin < 0 || l.x_end > width || l.x_begin >= l.x_end)
      throw std::invalid_argument(where + "extent [" + std::to_string(l.x_begin) +
                                  ", " + std::to_string(l.x_end) +
                                  ") not within the frame");
    const auto& t = l.texture;
    if (!(t.amplitude >= 0.0)) throw std::invalid_argument(where + "negative amplitude");
    if (t.kind == TextureKind::filtered_noise && !(t.cutoff > 0.0 && t.cutoff <= 0.5))
      throw std::invalid_argument(where + "noise cutoff must lie in (0, 0.5]");
    if (t.kind == TextureKind::checker && t.period < 1)
      throw std::invalid_argument(where + "checker period must be >= 1");
  }
}

int layer_shift(const CameraConfig& cam, int depth_level) {
  return oracle::rounded_disparity(disparity_model(cam, ViewSide::left), depth_level) +
         oracle::rounded_disparity(disparity_model(cam, ViewSide::right), depth_level);
}

RealMap filtered_noise_field(int width, int height, double cutoff,
                             std::uint64_t seed) {
  if (!(cutoff > 0.0)) throw std::invalid_argument("noise cutoff must be > 0");
  // Gaussian low-pass with its -3 dB point at `cutoff`.
  const double sigma = std::sqrt(std::log(2.0)) / (2.0 * std::numbers::pi * cutoff);
  const auto kernel = gaussian_kernel(sigma);
  const int r = static_cast<int>(kernel.size() / 2);
  const int ew = width + 2 * r, eh = height + 2 * r;

  std::mt19937_64 rng(seed);
  RealMap white(ew, eh);
  for (auto& v : white.samples()) {
    // Box-Muller on two unit uniforms.
    const double u1 = 1.0 - unit_uniform(rng);
    const double u2 = unit_uniform(rng);
    v = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }
  RealMap horiz(width, eh);
  for (int y = 0; y < eh; ++y)
    for (int x = 0; x < width; ++x) {
      double s = 0.0;
      for (int i = -r; i <= r; ++i) s += kernel[static_cast<std::size_t>(i + r)] * white(x + r + i, y);
      horiz(x, y) = s;
    }
  RealMap out(width, height);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      double s = 0.0;
      for (int i = -r; i <= r; ++i) s += kernel[static_cast<std::size_t>(i + r)] * horiz(x, y + r + i);
      out(x, y) = s;
    }

  double mean = 0.0;
  for (double v : out.samples()) mean += v;
  mean /= static_cast<double>(out.size());
  double var = 0.0;
  for (double v : out.samples()) var += (v - mean) * (v - mean);
  var /= static_cast<double>(out.size());
  const double inv_sd = var > 0.0 ? 1.0 / std::sqrt(var) : 0.0;
  for (auto& v : out.samples()) v = (v - mean) * inv_sd;
  return out;
}

SceneViews generate_scene(const SceneSpec& spec, const CameraConfig& cam) {
  spec.validate();
  cam.validate();
  const int w = spec.width, h = spec.height;

  std::vector<int> shift(spec.layers.size());
  int max_shift = 0;
  for (std::size_t i = 0; i < spec.layers.size(); ++i) {
    shift[i] = layer_shift(cam, spec.layers[i].depth_level);
    max_shift = std::max(max_shift, shift[i]);
  }

  std::vector<LayerTexture> textures;
  textures.reserve(spec.layers.size());
  for (std::size_t i = 0; i < spec.layers.size(); ++i)
    textures.emplace_back(spec.layers[i].texture, -max_shift, w, h,
                          spec.layers[i].x_begin, splitmix64(spec.seed + i));

  SceneViews v{LumaFrame(w, h, 128), LumaFrame(w, h, 0), LumaFrame(w, h, 128),
               LumaFrame(w, h, 0)};
  auto paint = [&](LumaFrame& tex, LumaFrame& dep, bool right_view) {
    for (std::size_t i = 0; i < spec.layers.size(); ++i) {
      const auto& l = spec.layers[i];
      const int s = right_view ? shift[i] : 0;
      const int x0 = l.x_begin <= 0 ? 0 : std::clamp(l.x_begin + s, 0, w);
      const int x1 = l.x_end >= w ? w : std::clamp(l.x_end + s, 0, w);
      for (int y = 0; y < h; ++y)
        for (int x = x0; x < x1; ++x) {
          tex(x, y) = to_luma(textures[i](x - s, y));
          dep(x, y) = static_cast<std::uint8_t>(l.depth_level);
        }
    }
  };
  paint(v.texture_left, v.depth_left, false);
  paint(v.texture_right, v.depth_right, true);
  return v;
}

}  // namespace vsde::harness
