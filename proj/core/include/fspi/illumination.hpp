#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fspi/frequency.hpp"
#include "fspi/image.hpp"

namespace fspi {

enum class PatternMode {
  FourStepSinusoid,
  ThreeStepSinusoid,
  /// Cosine/sine pairs (phases 0 and pi/2) decoded by correlation.
  SinusoidOrthogonal,
  HadamardDiff,
  Random,
};

enum class Polarity { Plus, Minus };

std::string_view to_string(PatternMode mode) noexcept;
PatternMode parse_pattern_mode(std::string_view token);

bool is_sinusoid(PatternMode mode) noexcept;

/// Number of equal phase steps in one period: 4 (four-step, orthogonal), 3 (three-step), 0 otherwise.
int phase_steps(PatternMode mode) noexcept;

/// One illumination pattern. For sinusoid modes (u, v) is the DFT frequency index and
/// phase = 2 pi phase_code / phase_steps(mode). For HadamardDiff, (u, v) selects the
/// Sylvester basis row k = v * width + u. For Random, seed_index names the pattern's stream.
struct PatternSpec {
  PatternMode mode = PatternMode::FourStepSinusoid;
  std::size_t u = 0;
  std::size_t v = 0;
  int phase_code = 0;
  Polarity polarity = Polarity::Plus;
  std::uint64_t seed_index = 0;

  Frequency frequency() const noexcept { return {u, v}; }
  double phase() const noexcept;
  double fx(std::size_t width) const noexcept { return static_cast<double>(u) / static_cast<double>(width); }
  double fy(std::size_t height) const noexcept { return static_cast<double>(v) / static_cast<double>(height); }

  bool operator==(const PatternSpec&) const = default;
};

/// Pattern intensity a + b cos(...) on a width x height grid; a >= b > 0 keeps light nonnegative.
struct PatternParams {
  double a = 127.5;
  double b = 127.5;
  std::size_t width = 0;
  std::size_t height = 0;

  void validate() const;
  bool operator==(const PatternParams&) const = default;
};

struct Sampling {
  enum class Kind { Full, HalfSpectrum, LowFrequency };
  Kind kind = Kind::Full;
  /// Fraction of frequencies kept, LowFrequency only.
  double fraction = 1.0;

  static Sampling full() noexcept { return {Kind::Full, 1.0}; }
  static Sampling half_spectrum() noexcept { return {Kind::HalfSpectrum, 1.0}; }
  static Sampling low_frequency(double fraction);

  /// "full", "half" or "lowfreq:<fraction>".
  std::string to_string() const;
  static Sampling parse(std::string_view token);

  bool operator==(const Sampling&) const = default;
};

/// A run of consecutive plan entries that together measure one coefficient.
struct PatternGroup {
  std::size_t first = 0;
  std::size_t count = 0;
  Frequency frequency;
};

struct AcquisitionPlan {
  PatternParams params;
  PatternMode mode = PatternMode::FourStepSinusoid;
  Sampling sampling;
  /// Stream seed for Random patterns.
  std::uint64_t pattern_seed = 0;
  std::vector<PatternSpec> entries;

  std::size_t size() const noexcept { return entries.size(); }
  std::size_t width() const noexcept { return params.width; }
  std::size_t height() const noexcept { return params.height; }

  /// Splits entries into measurement groups and checks the grouping invariant
  /// (throws InvalidArgument on a malformed plan).
  std::vector<PatternGroup> groups() const;
  void validate() const { (void)groups(); }

  bool operator==(const AcquisitionPlan&) const = default;
};

struct PlanOptions {
  std::uint64_t seed = 0;
  /// Random mode only; 0 selects 4 * width * height patterns.
  std::size_t random_patterns = 0;
};

AcquisitionPlan build_plan(PatternMode mode, const PatternParams& params, Sampling sampling,
                           const PlanOptions& options = {});
AcquisitionPlan build_plan(PatternMode mode, std::size_t width, std::size_t height, Sampling sampling,
                           const PlanOptions& options = {});

/// P(x, y) = a + b cos(2 pi fx x + 2 pi fy y + phase) with x, y starting at 0.
Image sinusoid_pattern(const PatternSpec& spec, const PatternParams& params);

/// Binary Sylvester-Hadamard pattern: Plus gives a (1 + H_k), Minus gives a (1 - H_k),
/// so values are {0, 2a}. width * height must be a power of two.
Image hadamard_pattern(const PatternSpec& spec, const PatternParams& params);

/// Binary {0, 2a} pattern with independent fair pixels drawn from stream (seed, seed_index).
Image random_pattern(const PatternSpec& spec, const PatternParams& params, std::uint64_t seed);

/// Pattern for entry `index` of a plan, dispatching on mode.
Image plan_pattern(const AcquisitionPlan& plan, std::size_t index);

/// +1 / -1 entry of the natural-order Sylvester matrix of order 2^m.
inline int sylvester_entry(std::size_t row, std::size_t col) noexcept {
  return (std::popcount(static_cast<unsigned long long>(row & col)) & 1) ? -1 : 1;
}

}  // namespace fspi
