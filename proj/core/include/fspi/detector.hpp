#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "fspi/illumination.hpp"
#include "fspi/image.hpp"

namespace fspi {

/// Additive white Gaussian detector noise at a given system SNR.
///
/// The system SNR follows SNR = 10 log10((v_s / v_n)^2) with v_s the mean absolute
/// reading of the sequence and v_n the noise standard deviation, so
/// sigma = mean(|I|) / 10^(snr_db / 20).
struct NoiseModel {
  enum class Kind { None, Gaussian };
  Kind kind = Kind::None;
  double snr_db = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 0;

  static NoiseModel none() noexcept { return {}; }
  static NoiseModel gaussian(double snr_db, std::uint64_t seed) noexcept {
    return {Kind::Gaussian, snr_db, seed};
  }
};

/// Detector readings, one per plan entry.
struct MeasurementSequence {
  std::vector<double> values;
  std::string plan_id;
  std::optional<double> noise_snr_db;
  std::optional<std::uint64_t> noise_seed;

  std::size_t size() const noexcept { return values.size(); }
};

/// Per-pattern multiplicative light-source weights (the time-varying signal).
struct TVSignal {
  std::vector<double> weights;
  /// Watermark information sum K2 = W_0 + W_pi, in the same units as `weights`.
  double k2 = 0.0;
  double dc_offset = 0.0;
  /// Factor the raw coefficients were divided by.
  double normalization = 1.0;

  std::size_t size() const noexcept { return weights.size(); }
  /// Throws unless weights are finite, nonnegative, of the given length, and k2 > 0.
  void validate(std::size_t plan_size) const;
};

/// Stable identifier of a plan's content (mode, parameters, sampling and every entry).
std::string plan_id(const AcquisitionPlan& plan);

/// I_i = w_i * sum_{x,y} R(x,y) P_i(x,y) (w_i = 1 without weights), then detector noise.
MeasurementSequence measure(const Image& scene, const AcquisitionPlan& plan, const NoiseModel& noise = {});
MeasurementSequence measure(const Image& scene, const AcquisitionPlan& plan, const TVSignal& weights,
                            const NoiseModel& noise = {});

/// K1 = 2a * sum R, equal to I_0 + I_pi of every noise-free four-step group.
double k1(const Image& scene, const PatternParams& params);

/// Noise standard deviation for a sequence at `snr_db`.
double noise_sigma(const MeasurementSequence& seq, double snr_db);

/// Adds i.i.d. N(0, sigma^2) to every entry; the draw for entry i comes from stream (seed, i).
MeasurementSequence apply_noise(MeasurementSequence seq, const NoiseModel& noise);

}  // namespace fspi
