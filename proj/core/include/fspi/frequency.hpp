#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fspi {

/// Index of a DFT-grid frequency: fx = u / width, fy = v / height, 0 <= u < width, 0 <= v < height.
struct Frequency {
  std::size_t u = 0;
  std::size_t v = 0;
  auto operator<=>(const Frequency&) const = default;
};

inline Frequency conjugate(Frequency f, std::size_t width, std::size_t height) noexcept {
  return {(width - f.u) % width, (height - f.v) % height};
}

inline bool is_self_conjugate(Frequency f, std::size_t width, std::size_t height) noexcept {
  return conjugate(f, width, height) == f;
}

/// Signed representative of k on a ring of n: [-n/2, n/2) for even n, [-(n-1)/2, (n-1)/2] for odd n.
inline std::int64_t wrapped_index(std::size_t k, std::size_t n) noexcept {
  const auto ki = static_cast<std::int64_t>(k);
  const auto ni = static_cast<std::int64_t>(n);
  return 2 * ki >= ni ? ki - ni : ki;
}

/// Squared wrapped distance to DC in cycles/pixel, scaled by (W H)^2 so it is an exact integer.
std::uint64_t scaled_wrapped_distance2(Frequency f, std::size_t width, std::size_t height) noexcept;

/// All W*H frequencies sorted by wrapped distance to DC; ties broken by (u, v) ascending.
std::vector<Frequency> frequencies_by_distance(std::size_t width, std::size_t height);

/// One representative per conjugate pair plus every self-conjugate frequency, in raster order
/// (v outer, u inner). The representative is the member that comes first in raster order.
std::vector<Frequency> half_spectrum_frequencies(std::size_t width, std::size_t height);

/// Boolean grid over the frequency plane, index v * width + u.
struct FrequencyRegion {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> selected;

  FrequencyRegion() = default;
  FrequencyRegion(std::size_t w, std::size_t h) : width(w), height(h), selected(w * h, 0) {}

  bool contains(Frequency f) const { return selected[f.v * width + f.u] != 0; }
  void set(Frequency f, bool on = true) { selected[f.v * width + f.u] = on ? 1 : 0; }
  std::size_t count() const;
  /// f in region implies conjugate(f) in region.
  bool conjugate_closed() const;
};

/// The fraction p of frequencies nearest DC (p in (0, 1]), at least one.
FrequencyRegion low_frequency_region(std::size_t width, std::size_t height, double fraction);

/// Frequencies with 1 <= u < width/2 (wrapped positive horizontal frequencies, all v).
/// Self-conjugate lines u = 0 and u = width/2 are excluded, so the region never
/// contains a conjugate pair.
FrequencyRegion half_u_region(std::size_t width, std::size_t height);

}  // namespace fspi
