#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fspi/illumination.hpp"

namespace fspi::detail {

// Evaluates sinusoid patterns through an exact integer phase reduction:
//   2 pi (u x / W + v y / H + k / steps) = 2 pi n / L,  L = lcm(W, H) * 12,
// so every pattern value is a + b * cos_table[n mod L]. The table is built with
// cos(t + pi) = -cos(t) enforced, which keeps P_0 + P_pi = 2a to rounding.
class SinusoidKernel {
 public:
  explicit SinusoidKernel(const PatternParams& params);

  double value(const PatternSpec& spec, std::size_t x, std::size_t y) const;
  void fill(const PatternSpec& spec, std::span<double> out) const;
  /// sum_{x,y} scene(x,y) * P(x,y)
  double inner_product(const PatternSpec& spec, std::span<const double> scene) const;

 private:
  std::uint64_t phase_offset(const PatternSpec& spec) const;

  PatternParams params_;
  std::uint64_t period_ = 0;
  std::uint64_t x_step_unit_ = 0;  // L / W
  std::uint64_t y_step_unit_ = 0;  // L / H
  std::vector<double> cos_table_;
};

class HadamardKernel {
 public:
  explicit HadamardKernel(const PatternParams& params);
  double value(const PatternSpec& spec, std::size_t x, std::size_t y) const;
  void fill(const PatternSpec& spec, std::span<double> out) const;
  double inner_product(const PatternSpec& spec, std::span<const double> scene) const;

 private:
  PatternParams params_;
};

class RandomKernel {
 public:
  RandomKernel(const PatternParams& params, std::uint64_t seed);
  void fill(const PatternSpec& spec, std::span<double> out) const;
  double inner_product(const PatternSpec& spec, std::span<const double> scene) const;

 private:
  PatternParams params_;
  std::uint64_t seed_;
};

// Mode-dispatching facade over the three kernels for one plan.
class PlanKernel {
 public:
  explicit PlanKernel(const AcquisitionPlan& plan);
  double inner_product(const PatternSpec& spec, std::span<const double> scene) const;
  void fill(const PatternSpec& spec, std::span<double> out) const;

 private:
  PatternMode mode_;
  std::optional<SinusoidKernel> sinusoid_;
  std::optional<HadamardKernel> hadamard_;
  std::optional<RandomKernel> random_;
};

}  // namespace fspi::detail
