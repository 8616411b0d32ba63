#pragma once

#include <array>

namespace fspi::detail {

// RGB in [0, 1] for t in [0, 1]; out-of-range t is clamped.
std::array<double, 3> viridis(double t) noexcept;

}  // namespace fspi::detail
