#include "fspi/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fspi/error.hpp"

namespace fspi {

std::uint64_t scaled_wrapped_distance2(Frequency f, std::size_t width, std::size_t height) noexcept {
  // (du / W)^2 + (dv / H)^2 scaled by (W H)^2 = du^2 H^2 + dv^2 W^2.
  const auto du = static_cast<std::uint64_t>(std::abs(wrapped_index(f.u, width)));
  const auto dv = static_cast<std::uint64_t>(std::abs(wrapped_index(f.v, height)));
  const auto w = static_cast<std::uint64_t>(width);
  const auto h = static_cast<std::uint64_t>(height);
  return du * du * h * h + dv * dv * w * w;
}

std::vector<Frequency> frequencies_by_distance(std::size_t width, std::size_t height) {
  std::vector<Frequency> all;
  all.reserve(width * height);
  for (std::size_t u = 0; u < width; ++u) {
    for (std::size_t v = 0; v < height; ++v) all.push_back({u, v});
  }
  std::stable_sort(all.begin(), all.end(), [&](Frequency a, Frequency b) {
    const auto da = scaled_wrapped_distance2(a, width, height);
    const auto db = scaled_wrapped_distance2(b, width, height);
    if (da != db) return da < db;
    return a < b;
  });
  return all;
}

std::vector<Frequency> half_spectrum_frequencies(std::size_t width, std::size_t height) {
  std::vector<Frequency> out;
  out.reserve(width * height / 2 + 4);
  for (std::size_t v = 0; v < height; ++v) {
    for (std::size_t u = 0; u < width; ++u) {
      const Frequency f{u, v};
      const Frequency c = conjugate(f, width, height);
      // Keep f when it precedes (or is) its conjugate in raster order.
      if (f.v * width + f.u <= c.v * width + c.u) out.push_back(f);
    }
  }
  return out;
}

std::size_t FrequencyRegion::count() const {
  return static_cast<std::size_t>(std::count(selected.begin(), selected.end(), std::uint8_t{1}));
}

bool FrequencyRegion::conjugate_closed() const {
  for (std::size_t v = 0; v < height; ++v) {
    for (std::size_t u = 0; u < width; ++u) {
      if (contains({u, v}) && !contains(conjugate({u, v}, width, height))) return false;
    }
  }
  return true;
}

FrequencyRegion low_frequency_region(std::size_t width, std::size_t height, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw InvalidArgument("low-frequency fraction must lie in (0, 1], got " + std::to_string(fraction));
  }
  const auto order = frequencies_by_distance(width, height);
  const auto keep = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::llround(fraction * static_cast<double>(order.size()))), 1,
      order.size());
  FrequencyRegion region(width, height);
  for (std::size_t i = 0; i < keep; ++i) region.set(order[i]);
  return region;
}

FrequencyRegion half_u_region(std::size_t width, std::size_t height) {
  FrequencyRegion region(width, height);
  for (std::size_t v = 0; v < height; ++v) {
    for (std::size_t u = 1; 2 * u < width; ++u) region.set({u, v});
  }
  return region;
}

}  // namespace fspi
