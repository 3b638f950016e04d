#pragma once

#include "vsde/frame.hpp"

namespace vsde {

// Mean of squared sample differences. Throws std::invalid_argument on a
// dimension mismatch.
double mse(const LumaFrame& a, const LumaFrame& b);

}  // namespace vsde
