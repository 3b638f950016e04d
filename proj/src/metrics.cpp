#include "vsde/metrics.hpp"

#include "vsde/kernels.hpp"

namespace vsde {

double mse(const LumaFrame& a, const LumaFrame& b) {
  require_same_dims(a, b, "mse");
  return kernels::parallel::sum_squared_difference(a.samples(), b.samples()) /
         static_cast<double>(a.size());
}

}  // namespace vsde
