#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fspi/detector.hpp"
#include "fspi/image.hpp"

namespace fspi {

/// Stabilising constants of the global SSIM, for an 8-bit range.
struct SsimConstants {
  double c1 = (0.01 * 255.0) * (0.01 * 255.0);
  double c2 = (0.03 * 255.0) * (0.03 * 255.0);
};

/// How images are mapped to the n-bit range before PSNR and SSIM.
struct MetricRange {
  enum class Kind { MinMax, Fixed };
  Kind kind = Kind::MinMax;
  /// Fixed only: input values lo..hi map to 0..2^n - 1.
  double lo = 0.0;
  double hi = 1.0;

  static MetricRange min_max() noexcept { return {}; }
  static MetricRange fixed(double lo, double hi) noexcept { return {Kind::Fixed, lo, hi}; }
  std::string to_string() const;
};

/// (1 / (l w)) sum (x - y)^2 on the raw values.
double mse(const Image& x, const Image& y);

/// Image mapped to [0, 2^bit_depth - 1] under `range`.
Image to_bit_range(const Image& img, const MetricRange& range, int bit_depth = 8);

/// 10 log10((2^n - 1)^2 / MSE) after mapping both images to the n-bit range;
/// +inf when the mapped images are identical.
double psnr(const Image& x, const Image& y, int bit_depth = 8, const MetricRange& range = {});

/// Global (single-window) SSIM of the two images mapped to the 8-bit range.
double ssim(const Image& x, const Image& y, const SsimConstants& c = {}, const MetricRange& range = {});

/// Global SSIM on the raw values, no range mapping.
double ssim_raw(const Image& x, const Image& y, const SsimConstants& c = {});

/// 10 log10((mean|signal| / noise_sigma)^2); +inf when noise_sigma = 0.
double snr_db(const MeasurementSequence& signal, double noise_sigma);

struct MetricReport {
  std::string reference_id;
  std::string test_id;
  double mse = 0.0;
  double psnr_db = 0.0;
  double ssim = 0.0;
  /// Range mapping used for psnr_db and ssim.
  std::string normalization;
  int bit_depth = 8;
};

/// PSNR and SSIM under `range`; mse is computed on the mapped images so psnr_db is +inf iff mse = 0.
MetricReport compare(const Image& reference, const Image& test, std::string reference_id, std::string test_id,
                     const MetricRange& range = {});

/// Non-finite numbers are written as the strings "inf", "-inf" and "nan".
nlohmann::json to_json(const MetricReport& report);
MetricReport metric_report_from_json(const nlohmann::json& j);

/// Pearson correlation coefficient of the pixel values (0 if either image is constant).
double correlation(const Image& x, const Image& y);

/// Sample mean and standard deviation (n - 1 denominator; 0 for a single value).
std::pair<double, double> mean_std(const std::vector<double>& values);

}  // namespace fspi
