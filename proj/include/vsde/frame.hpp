#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vsde {

// Row-major single-plane image. LumaFrame holds 8-bit texture luma or
// quantized inverse depth; RealMap holds derived per-pixel quantities.
template <class T>
class Plane {
 public:
  using value_type = T;

  Plane() = default;

  Plane(int width, int height, T fill = T{}) : width_(width), height_(height) {
    check_dims(width, height);
    samples_.assign(static_cast<std::size_t>(width) * height, fill);
  }

  Plane(int width, int height, std::vector<T> samples)
      : width_(width), height_(height), samples_(std::move(samples)) {
    check_dims(width, height);
    if (samples_.size() != static_cast<std::size_t>(width) * height)
      throw std::invalid_argument("plane: sample count does not match " +
                                  std::to_string(width) + "x" +
                                  std::to_string(height));
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }

  T& operator()(int x, int y) noexcept {
    return samples_[static_cast<std::size_t>(y) * width_ + x];
  }
  const T& operator()(int x, int y) const noexcept {
    return samples_[static_cast<std::size_t>(y) * width_ + x];
  }

  // Replicate-border access.
  const T& clamped(int x, int y) const noexcept {
    x = x < 0 ? 0 : (x >= width_ ? width_ - 1 : x);
    y = y < 0 ? 0 : (y >= height_ ? height_ - 1 : y);
    return (*this)(x, y);
  }

  std::span<T> row(int y) noexcept {
    return {samples_.data() + static_cast<std::size_t>(y) * width_,
            static_cast<std::size_t>(width_)};
  }
  std::span<const T> row(int y) const noexcept {
    return {samples_.data() + static_cast<std::size_t>(y) * width_,
            static_cast<std::size_t>(width_)};
  }

  std::span<T> samples() noexcept { return samples_; }
  std::span<const T> samples() const noexcept { return samples_; }
  const std::vector<T>& data() const noexcept { return samples_; }

  bool same_dims(int w, int h) const noexcept {
    return width_ == w && height_ == h;
  }
  template <class U>
  bool same_dims(const Plane<U>& other) const noexcept {
    return width_ == other.width() && height_ == other.height();
  }

  friend bool operator==(const Plane&, const Plane&) = default;

 private:
  static void check_dims(int width, int height) {
    if (width <= 0 || height <= 0)
      throw std::invalid_argument("plane: dimensions must be positive, got " +
                                  std::to_string(width) + "x" +
                                  std::to_string(height));
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> samples_;
};

using LumaFrame = Plane<std::uint8_t>;
using RealMap = Plane<double>;

template <class A, class B>
void require_same_dims(const Plane<A>& a, const Plane<B>& b, const char* what) {
  if (!a.same_dims(b))
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.width()) + "x" +
                                std::to_string(a.height()) + " vs " +
                                std::to_string(b.width()) + "x" +
                                std::to_string(b.height()) + ")");
}

}  // namespace vsde
