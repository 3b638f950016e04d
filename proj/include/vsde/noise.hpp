#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "vsde/frame.hpp"

namespace vsde::harness {

enum class NoiseKind { none, uniform, discrete_laplace };

NoiseKind parse_noise_kind(const std::string& name);
std::string to_string(NoiseKind kind);

// Integer-valued zero-mean noise law. uniform(delta) has variance delta^2/3;
// discrete_laplace(scale) has variance 2 scale^2.
struct NoiseLaw {
  NoiseKind kind = NoiseKind::none;
  double scale = 0.0;

  double variance() const;
  friend bool operator==(const NoiseLaw&, const NoiseLaw&) = default;
};

struct NoiseSpec {
  NoiseLaw texture;
  NoiseLaw depth;
  std::uint64_t seed = 0;

  friend bool operator==(const NoiseSpec&, const NoiseSpec&) = default;
};

// Uniform double in [0, 1) from the top 53 bits.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Draws integer samples of a NoiseLaw. The sampling transforms are written
// out so that streams are identical across standard libraries.
class NoiseSampler {
 public:
  NoiseSampler(NoiseLaw law, std::uint64_t seed);
  int operator()();
  const NoiseLaw& law() const noexcept { return law_; }

 private:
  NoiseLaw law_;
  std::mt19937_64 rng_;
  double uniform_half_width_ = 0.0;  // rounded uniform on [-a, a]
  double log_q_ = 0.0;               // two-sided geometric ratio
};

// Half-width a such that round(U(-a, a)) has the given variance.
double rounded_uniform_half_width(double variance);
// Ratio q of the two-sided geometric law p(n) ~ q^|n| with the given variance.
double two_sided_geometric_ratio(double variance);

// Adds iid noise of the given law and clamps to [0, 255].
LumaFrame simulate_compression(const LumaFrame& frame, const NoiseLaw& law,
                               std::uint64_t seed);

}  // namespace vsde::harness
