#include "pattern_kernel.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "fspi/error.hpp"
#include "fspi/rng.hpp"

namespace fspi::detail {

SinusoidKernel::SinusoidKernel(const PatternParams& params) : params_(params) {
  params_.validate();
  const std::uint64_t w = params_.width;
  const std::uint64_t h = params_.height;
  period_ = std::lcm(w, h) * 12;
  x_step_unit_ = period_ / w;
  y_step_unit_ = period_ / h;

  const std::uint64_t half = period_ / 2;
  const std::uint64_t quarter = period_ / 4;
  cos_table_.assign(period_, 0.0);
  // First quadrant by std::cos, the rest by cos(pi - t) = -cos(t), cos(t + pi) = -cos(t).
  for (std::uint64_t n = 0; n < quarter; ++n) {
    const double c = std::cos(2.0 * std::numbers::pi * static_cast<double>(n) / static_cast<double>(period_));
    cos_table_[n] = c;
    cos_table_[half - n] = -c;
  }
  cos_table_[quarter] = 0.0;
  for (std::uint64_t n = 0; n < half; ++n) cos_table_[n + half] = -cos_table_[n];
}

std::uint64_t SinusoidKernel::phase_offset(const PatternSpec& spec) const {
  const int steps = phase_steps(spec.mode);
  if (steps == 0) throw ModeMismatch("sinusoid kernel given a non-sinusoid pattern");
  if (spec.phase_code < 0 || spec.phase_code >= steps) {
    throw InvalidArgument("phase code " + std::to_string(spec.phase_code) + " out of range");
  }
  if (spec.u >= params_.width || spec.v >= params_.height) {
    throw InvalidArgument("pattern frequency outside the grid");
  }
  return static_cast<std::uint64_t>(spec.phase_code) * (period_ / static_cast<std::uint64_t>(steps));
}

double SinusoidKernel::value(const PatternSpec& spec, std::size_t x, std::size_t y) const {
  const std::uint64_t n = (spec.u * x_step_unit_ % period_ * x + spec.v * y_step_unit_ % period_ * y +
                           phase_offset(spec)) %
                          period_;
  return params_.a + params_.b * cos_table_[n];
}

void SinusoidKernel::fill(const PatternSpec& spec, std::span<double> out) const {
  const std::uint64_t off = phase_offset(spec);
  const std::uint64_t xs = spec.u * x_step_unit_ % period_;
  const std::uint64_t ys = spec.v * y_step_unit_ % period_;
  std::uint64_t row = off;
  for (std::size_t y = 0; y < params_.height; ++y) {
    std::uint64_t n = row;
    double* dst = out.data() + y * params_.width;
    for (std::size_t x = 0; x < params_.width; ++x) {
      dst[x] = params_.a + params_.b * cos_table_[n];
      n += xs;
      if (n >= period_) n -= period_;
    }
    row += ys;
    if (row >= period_) row -= period_;
  }
}

double SinusoidKernel::inner_product(const PatternSpec& spec, std::span<const double> scene) const {
  const std::uint64_t off = phase_offset(spec);
  const std::uint64_t xs = spec.u * x_step_unit_ % period_;
  const std::uint64_t ys = spec.v * y_step_unit_ % period_;
  const double a = params_.a;
  const double b = params_.b;
  double sum = 0.0;
  std::uint64_t row = off;
  for (std::size_t y = 0; y < params_.height; ++y) {
    std::uint64_t n = row;
    const double* src = scene.data() + y * params_.width;
    for (std::size_t x = 0; x < params_.width; ++x) {
      sum += src[x] * (a + b * cos_table_[n]);
      n += xs;
      if (n >= period_) n -= period_;
    }
    row += ys;
    if (row >= period_) row -= period_;
  }
  return sum;
}

HadamardKernel::HadamardKernel(const PatternParams& params) : params_(params) {
  params_.validate();
  const std::size_t n = params_.width * params_.height;
  if (!std::has_single_bit(n)) {
    throw InvalidArgument("Hadamard patterns need width*height to be a power of two, got " +
                          std::to_string(n));
  }
}

double HadamardKernel::value(const PatternSpec& spec, std::size_t x, std::size_t y) const {
  const std::size_t k = spec.v * params_.width + spec.u;
  const int h = sylvester_entry(k, y * params_.width + x);
  const int s = spec.polarity == Polarity::Plus ? h : -h;
  return params_.a * static_cast<double>(1 + s);
}

void HadamardKernel::fill(const PatternSpec& spec, std::span<double> out) const {
  for (std::size_t y = 0; y < params_.height; ++y) {
    for (std::size_t x = 0; x < params_.width; ++x) out[y * params_.width + x] = value(spec, x, y);
  }
}

double HadamardKernel::inner_product(const PatternSpec& spec, std::span<const double> scene) const {
  const std::size_t k = spec.v * params_.width + spec.u;
  const bool plus = spec.polarity == Polarity::Plus;
  const double lit = 2.0 * params_.a;
  double sum = 0.0;
  for (std::size_t p = 0; p < scene.size(); ++p) {
    const bool positive = sylvester_entry(k, p) > 0;
    if (positive == plus) sum += scene[p] * lit;
  }
  return sum;
}

RandomKernel::RandomKernel(const PatternParams& params, std::uint64_t seed) : params_(params), seed_(seed) {
  params_.validate();
}

void RandomKernel::fill(const PatternSpec& spec, std::span<double> out) const {
  CounterRng rng(seed_, spec.seed_index);
  const double lit = 2.0 * params_.a;
  std::uint64_t bits = 0;
  for (std::size_t p = 0; p < out.size(); ++p) {
    if (p % 64 == 0) bits = rng.next_u64();
    out[p] = (bits >> (p % 64)) & 1U ? lit : 0.0;
  }
}

double RandomKernel::inner_product(const PatternSpec& spec, std::span<const double> scene) const {
  CounterRng rng(seed_, spec.seed_index);
  const double lit = 2.0 * params_.a;
  std::uint64_t bits = 0;
  double sum = 0.0;
  for (std::size_t p = 0; p < scene.size(); ++p) {
    if (p % 64 == 0) bits = rng.next_u64();
    if ((bits >> (p % 64)) & 1U) sum += scene[p] * lit;
  }
  return sum;
}

PlanKernel::PlanKernel(const AcquisitionPlan& plan) : mode_(plan.mode) {
  switch (plan.mode) {
    case PatternMode::FourStepSinusoid:
    case PatternMode::ThreeStepSinusoid:
    case PatternMode::SinusoidOrthogonal:
      sinusoid_.emplace(plan.params);
      break;
    case PatternMode::HadamardDiff:
      hadamard_.emplace(plan.params);
      break;
    case PatternMode::Random:
      random_.emplace(plan.params, plan.pattern_seed);
      break;
  }
}

double PlanKernel::inner_product(const PatternSpec& spec, std::span<const double> scene) const {
  if (spec.mode != mode_) throw ModeMismatch("pattern mode differs from plan mode");
  if (sinusoid_) return sinusoid_->inner_product(spec, scene);
  if (hadamard_) return hadamard_->inner_product(spec, scene);
  return random_->inner_product(spec, scene);
}

void PlanKernel::fill(const PatternSpec& spec, std::span<double> out) const {
  if (spec.mode != mode_) throw ModeMismatch("pattern mode differs from plan mode");
  if (sinusoid_) return sinusoid_->fill(spec, out);
  if (hadamard_) return hadamard_->fill(spec, out);
  random_->fill(spec, out);
}

}  // namespace fspi::detail
