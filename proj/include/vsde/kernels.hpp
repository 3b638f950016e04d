#pragma once

// Data-parallel inner loops. Every kernel has two implementations with the
// same contract: `serial` is the plain reference kept for tests and the
// benchmark, `parallel` is the OpenMP version used by the library.
//
// Parallel reductions accumulate fixed-size blocks (one image row, or
// kBlock elements) and merge the partials in index order, so their results
// do not depend on the thread count.

#include <cstddef>
#include <cstdint>
#include <span>

#include "vsde/frame.hpp"

namespace vsde::kernels {

inline constexpr std::size_t kBlock = 4096;

struct SobelMaps {
  RealMap gx;
  RealMap gy;
  RealMap magnitude;
};

struct TaylorSums {
  double first = 0.0;   // sum of gx^2
  double second = 0.0;  // sum of curvature^2
};

namespace serial {
SobelMaps sobel(const LumaFrame& frame);
// Sum over (r, c) of column_weight[c] * power[r * cols + c].
double column_weighted_sum(std::span<const double> power, int rows, int cols,
                           std::span<const double> column_weight);
double sum_squared_difference(std::span<const std::uint8_t> a,
                              std::span<const std::uint8_t> b);
TaylorSums taylor_sums(std::span<const double> gx,
                       std::span<const double> curvature);
}  // namespace serial

namespace parallel {
SobelMaps sobel(const LumaFrame& frame);
double column_weighted_sum(std::span<const double> power, int rows, int cols,
                           std::span<const double> column_weight);
double sum_squared_difference(std::span<const std::uint8_t> a,
                              std::span<const std::uint8_t> b);
TaylorSums taylor_sums(std::span<const double> gx,
                       std::span<const double> curvature);
}  // namespace parallel

// Number of threads the parallel kernels will use (1 without OpenMP).
int max_threads();

}  // namespace vsde::kernels
