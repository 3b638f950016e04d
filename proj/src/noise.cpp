#include "vsde/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vsde::harness {

NoiseKind parse_noise_kind(const std::string& name) {
  if (name == "none") return NoiseKind::none;
  if (name == "uniform") return NoiseKind::uniform;
  if (name == "discrete-laplace" || name == "laplace") return NoiseKind::discrete_laplace;
  throw std::invalid_argument("unknown noise kind '" + name + "'");
}

std::string to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::none: return "none";
    case NoiseKind::uniform: return "uniform";
    case NoiseKind::discrete_laplace: return "discrete-laplace";
  }
  return "none";
}

double NoiseLaw::variance() const {
  if (!(scale >= 0.0) || !std::isfinite(scale))
    throw std::invalid_argument("noise scale must be finite and >= 0");
  switch (kind) {
    case NoiseKind::none: return 0.0;
    case NoiseKind::uniform: return scale * scale / 3.0;
    case NoiseKind::discrete_laplace: return 2.0 * scale * scale;
  }
  return 0.0;
}

namespace {

double rounded_uniform_variance(double a) {
  if (a <= 0.5) return 0.0;
  double acc = 0.0;
  const int n_max = static_cast<int>(std::ceil(a + 0.5));
  for (int n = 1; n <= n_max; ++n) {
    const double len = std::max(0.0, std::min(a, n + 0.5) - (n - 0.5));
    acc += 2.0 * n * n * len;
  }
  return acc / (2.0 * a);
}

}  // namespace

double rounded_uniform_half_width(double variance) {
  if (!(variance >= 0.0)) throw std::invalid_argument("variance must be >= 0");
  if (variance == 0.0) return 0.0;
  double lo = 0.5, hi = std::sqrt(3.0 * variance) + 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (rounded_uniform_variance(mid) < variance ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double two_sided_geometric_ratio(double variance) {
  if (!(variance >= 0.0)) throw std::invalid_argument("variance must be >= 0");
  if (variance == 0.0) return 0.0;
  // Solves 2q / (1 - q)^2 = variance.
  return ((variance + 1.0) - std::sqrt(2.0 * variance + 1.0)) / variance;
}

NoiseSampler::NoiseSampler(NoiseLaw law, std::uint64_t seed)
    : law_(law), rng_(seed) {
  const double v = law_.variance();
  if (law_.kind == NoiseKind::uniform) uniform_half_width_ = rounded_uniform_half_width(v);
  if (law_.kind == NoiseKind::discrete_laplace && v > 0.0)
    log_q_ = std::log(two_sided_geometric_ratio(v));
}

int NoiseSampler::operator()() {
  switch (law_.kind) {
    case NoiseKind::none:
      return 0;
    case NoiseKind::uniform: {
      if (uniform_half_width_ == 0.0) return 0;
      const double a = uniform_half_width_;
      return static_cast<int>(std::floor(-a + 2.0 * a * unit_uniform(rng_) + 0.5));
    }
    case NoiseKind::discrete_laplace: {
      if (log_q_ == 0.0) return 0;
      // Difference of two geometric variables with P(k) = (1 - q) q^k.
      const auto geometric = [&] {
        return static_cast<int>(std::floor(std::log1p(-unit_uniform(rng_)) / log_q_));
      };
      const int g1 = geometric();
      return g1 - geometric();
    }
  }
  return 0;
}

LumaFrame simulate_compression(const LumaFrame& frame, const NoiseLaw& law,
                               std::uint64_t seed) {
  if (law.kind == NoiseKind::none || law.variance() == 0.0) return frame;
  NoiseSampler sample(law, seed);
  LumaFrame out = frame;
  for (auto& v : out.samples()) v = static_cast<std::uint8_t>(std::clamp(v + sample(), 0, 255));
  return out;
}

}  // namespace vsde::harness
