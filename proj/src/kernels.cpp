#include "vsde/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#if VSDE_USE_OPENMP
#include <omp.h>
#define VSDE_OMP_FOR _Pragma("omp parallel for schedule(static)")
#else
#define VSDE_OMP_FOR
#endif

namespace vsde::kernels {

namespace {

void check_sobel_input(const LumaFrame& frame) {
  if (frame.width() < 3 || frame.height() < 3)
    throw std::invalid_argument("sobel: frame must be at least 3x3");
}

// 3x3 Sobel at (x, y) with replicate borders.
//   gx = [-1 0 1; -2 0 2; -1 0 1],  gy = transpose
inline void sobel_at(const LumaFrame& f, int x, int y, double& gx, double& gy) {
  const double a = f.clamped(x - 1, y - 1), b = f.clamped(x, y - 1),
               c = f.clamped(x + 1, y - 1);
  const double d = f.clamped(x - 1, y), e = f.clamped(x + 1, y);
  const double g = f.clamped(x - 1, y + 1), h = f.clamped(x, y + 1),
               i = f.clamped(x + 1, y + 1);
  gx = (c + 2.0 * e + i) - (a + 2.0 * d + g);
  gy = (g + 2.0 * h + i) - (a + 2.0 * b + c);
}

std::size_t block_count(std::size_t n) { return (n + kBlock - 1) / kBlock; }

}  // namespace

namespace serial {

SobelMaps sobel(const LumaFrame& frame) {
  check_sobel_input(frame);
  const int w = frame.width(), h = frame.height();
  SobelMaps out{RealMap(w, h), RealMap(w, h), RealMap(w, h)};
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      double gx = 0.0, gy = 0.0;
      sobel_at(frame, x, y, gx, gy);
      out.gx(x, y) = gx;
      out.gy(x, y) = gy;
      out.magnitude(x, y) = std::sqrt(gx * gx + gy * gy);
    }
  return out;
}

double column_weighted_sum(std::span<const double> power, int rows, int cols,
                           std::span<const double> column_weight) {
  double sum = 0.0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      sum += column_weight[c] * power[static_cast<std::size_t>(r) * cols + c];
  return sum;
}

double sum_squared_difference(std::span<const std::uint8_t> a,
                              std::span<const std::uint8_t> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
    sum += d * d;
  }
  return sum;
}

TaylorSums taylor_sums(std::span<const double> gx,
                       std::span<const double> curvature) {
  TaylorSums s;
  for (std::size_t i = 0; i < gx.size(); ++i) {
    s.first += gx[i] * gx[i];
    s.second += curvature[i] * curvature[i];
  }
  return s;
}

}  // namespace serial

namespace parallel {

SobelMaps sobel(const LumaFrame& frame) {
  check_sobel_input(frame);
  const int w = frame.width(), h = frame.height();
  SobelMaps out{RealMap(w, h), RealMap(w, h), RealMap(w, h)};
  VSDE_OMP_FOR
  for (int y = 0; y < h; ++y) {
    auto gx_row = out.gx.row(y);
    auto gy_row = out.gy.row(y);
    auto mag_row = out.magnitude.row(y);
    for (int x = 0; x < w; ++x) {
      double gx = 0.0, gy = 0.0;
      sobel_at(frame, x, y, gx, gy);
      gx_row[x] = gx;
      gy_row[x] = gy;
      mag_row[x] = std::sqrt(gx * gx + gy * gy);
    }
  }
  return out;
}

double column_weighted_sum(std::span<const double> power, int rows, int cols,
                           std::span<const double> column_weight) {
  std::vector<double> partial(static_cast<std::size_t>(rows), 0.0);
  VSDE_OMP_FOR
  for (int r = 0; r < rows; ++r) {
    const double* p = power.data() + static_cast<std::size_t>(r) * cols;
    double s = 0.0;
    for (int c = 0; c < cols; ++c) s += column_weight[c] * p[c];
    partial[r] = s;
  }
  double sum = 0.0;
  for (const double s : partial) sum += s;
  return sum;
}

double sum_squared_difference(std::span<const std::uint8_t> a,
                              std::span<const std::uint8_t> b) {
  const std::size_t n = a.size();
  const std::size_t blocks = block_count(n);
  std::vector<double> partial(blocks, 0.0);
  VSDE_OMP_FOR
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(blocks); ++k) {
    const std::size_t begin = static_cast<std::size_t>(k) * kBlock;
    const std::size_t end = std::min(n, begin + kBlock);
    // Squared 8-bit differences are exact in 64-bit integers.
    std::int64_t s = 0;
    for (std::size_t i = begin; i < end; ++i) {
      const int d = static_cast<int>(a[i]) - static_cast<int>(b[i]);
      s += d * d;
    }
    partial[k] = static_cast<double>(s);
  }
  double sum = 0.0;
  for (const double s : partial) sum += s;
  return sum;
}

TaylorSums taylor_sums(std::span<const double> gx,
                       std::span<const double> curvature) {
  const std::size_t n = gx.size();
  const std::size_t blocks = block_count(n);
  std::vector<TaylorSums> partial(blocks);
  VSDE_OMP_FOR
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(blocks); ++k) {
    const std::size_t begin = static_cast<std::size_t>(k) * kBlock;
    const std::size_t end = std::min(n, begin + kBlock);
    TaylorSums s;
    for (std::size_t i = begin; i < end; ++i) {
      s.first += gx[i] * gx[i];
      s.second += curvature[i] * curvature[i];
    }
    partial[k] = s;
  }
  TaylorSums sum;
  for (const auto& s : partial) {
    sum.first += s.first;
    sum.second += s.second;
  }
  return sum;
}

}  // namespace parallel

int max_threads() {
#if VSDE_USE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace vsde::kernels
