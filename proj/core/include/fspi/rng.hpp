#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fspi {

/// Counter-based generator: draw n of stream (seed, stream) is
/// splitmix64_mix(key + (n + 1) * 0x9E3779B97F4A7C15) where
/// key = splitmix64_mix(seed ^ splitmix64_mix(stream + 0x9E3779B97F4A7C15)).
///
/// Every stream is addressable without replaying earlier streams, so the noise
/// of measurement i or the bits of random pattern k can be produced in any order.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept;

  std::uint64_t next_u64() noexcept;
  /// Uniform in [0, 1) with 53 random bits.
  double next_uniform() noexcept;
  /// Standard normal via the Box-Muller transform (both outputs are used).
  double next_normal() noexcept;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept;

/// Fisher-Yates shuffle of 0..size-1 driven by CounterRng(seed, 0).
std::vector<std::size_t> seeded_permutation(std::uint64_t seed, std::size_t size);

}  // namespace fspi
