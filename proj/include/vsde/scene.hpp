#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vsde/camera.hpp"
#include "vsde/frame.hpp"

namespace vsde::harness {

enum class TextureKind { flat, ramp, sine, filtered_noise, checker };

TextureKind parse_texture_kind(const std::string& name);
std::string to_string(TextureKind kind);

// Surface pattern of a layer, defined on left-view columns so that it moves
// with the layer between views. Values are clamped to [0, 255].
struct TextureSpec {
  TextureKind kind = TextureKind::flat;
  double mean = 128.0;
  double amplitude = 0.0;     // sine/checker half swing, noise standard deviation
  double slope = 0.0;         // ramp: levels per pixel along x
  double frequency = 0.0;     // sine: cycles per pixel along x
  double frequency_y = 0.0;   // sine: cycles per pixel along y
  double cutoff = 0.25;       // filtered noise: -3 dB frequency, cycles per pixel
  int period = 8;             // checker: cell size in pixels

  friend bool operator==(const TextureSpec&, const TextureSpec&) = default;
};

// A fronto-parallel layer covering left-view columns [x_begin, x_end). An
// extent that touches a frame border continues beyond it.
struct LayerSpec {
  int depth_level = 0;
  int x_begin = 0;
  int x_end = 0;
  TextureSpec texture;

  friend bool operator==(const LayerSpec&, const LayerSpec&) = default;
};

// Layers are painted back to front in list order.
struct SceneSpec {
  int width = 0;
  int height = 0;
  std::vector<LayerSpec> layers;
  std::uint64_t seed = 0;

  void validate() const;
  friend bool operator==(const SceneSpec&, const SceneSpec&) = default;
};

struct SceneViews {
  LumaFrame texture_left, depth_left, texture_right, depth_right;
};

// Column offset of a layer between the left and the right reference: the
// sum of the two rounded reference-to-virtual disparities, so that both
// references warp a layer onto the same virtual columns.
int layer_shift(const CameraConfig& cam, int depth_level);

// Renders both reference views of the layered scene. Deterministic in
// spec.seed. Throws std::invalid_argument for an invalid spec.
SceneViews generate_scene(const SceneSpec& spec, const CameraConfig& cam);

// Zero-mean, unit-variance Gaussian-filtered white noise field. Deterministic
// in seed.
RealMap filtered_noise_field(int width, int height, double cutoff,
                             std::uint64_t seed);

}  // namespace vsde::harness
