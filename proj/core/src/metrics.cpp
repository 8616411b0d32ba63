#include "fspi/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fspi/error.hpp"
#include "kahan.hpp"
#include "numfmt.hpp"

namespace fspi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double peak_value(int bit_depth) {
  if (bit_depth < 1 || bit_depth > 32) throw InvalidArgument("bit depth must lie in 1..32");
  return std::ldexp(1.0, bit_depth) - 1.0;
}

struct Moments {
  double mean_x, mean_y, var_x, var_y, cov;
};

Moments moments(const Image& x, const Image& y) {
  const auto xs = x.values();
  const auto ys = y.values();
  const double n = static_cast<double>(xs.size());
  detail::NeumaierSum sx, sy;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx.add(xs[i]);
    sy.add(ys[i]);
  }
  const double mx = sx.value() / n;
  const double my = sy.value() / n;
  detail::NeumaierSum vx, vy, cxy;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    vx.add(dx * dx);
    vy.add(dy * dy);
    cxy.add(dx * dy);
  }
  return {mx, my, vx.value() / n, vy.value() / n, cxy.value() / n};
}

double json_number(const nlohmann::json& j) {
  if (j.is_string()) return detail::parse_double(j.get<std::string>());
  return j.get<double>();
}

nlohmann::json number_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace

std::string MetricRange::to_string() const {
  if (kind == Kind::MinMax) return "min-max";
  return "fixed:" + detail::format_double(lo) + ":" + detail::format_double(hi);
}

double mse(const Image& x, const Image& y) {
  require_same_shape(x, y, "mse");
  if (x.empty()) throw InvalidArgument("mse of empty images");
  const auto xs = x.values();
  const auto ys = y.values();
  detail::NeumaierSum acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double d = xs[i] - ys[i];
    acc.add(d * d);
  }
  return acc.value() / static_cast<double>(xs.size());
}

Image to_bit_range(const Image& img, const MetricRange& range, int bit_depth) {
  const double peak = peak_value(bit_depth);
  if (range.kind == MetricRange::Kind::MinMax) return scaled(normalize_min_max(img), peak);
  if (!(range.hi > range.lo)) throw InvalidArgument("fixed metric range needs hi > lo");
  return scaled(offset(img, -range.lo), peak / (range.hi - range.lo));
}

double psnr(const Image& x, const Image& y, int bit_depth, const MetricRange& range) {
  require_same_shape(x, y, "psnr");
  const double peak = peak_value(bit_depth);
  const double e = mse(to_bit_range(x, range, bit_depth), to_bit_range(y, range, bit_depth));
  if (e == 0.0) return kInf;
  return 10.0 * std::log10(peak * peak / e);
}

double ssim_raw(const Image& x, const Image& y, const SsimConstants& c) {
  require_same_shape(x, y, "ssim");
  if (x.empty()) throw InvalidArgument("ssim of empty images");
  const Moments m = moments(x, y);
  const double num = (2.0 * m.mean_x * m.mean_y + c.c1) * (2.0 * m.cov + c.c2);
  const double den = (m.mean_x * m.mean_x + m.mean_y * m.mean_y + c.c1) * (m.var_x + m.var_y + c.c2);
  return num / den;
}

double ssim(const Image& x, const Image& y, const SsimConstants& c, const MetricRange& range) {
  require_same_shape(x, y, "ssim");
  return ssim_raw(to_bit_range(x, range), to_bit_range(y, range), c);
}

double snr_db(const MeasurementSequence& signal, double noise_sigma) {
  if (signal.values.empty()) throw InvalidArgument("snr_db of an empty sequence");
  if (!(noise_sigma >= 0.0)) throw InvalidArgument("noise sigma must be nonnegative");
  if (noise_sigma == 0.0) return kInf;
  detail::NeumaierSum acc;
  for (double v : signal.values) acc.add(std::abs(v));
  const double ratio = acc.value() / static_cast<double>(signal.values.size()) / noise_sigma;
  return 10.0 * std::log10(ratio * ratio);
}

MetricReport compare(const Image& reference, const Image& test, std::string reference_id, std::string test_id,
                     const MetricRange& range) {
  require_same_shape(reference, test, "compare");
  MetricReport r;
  r.reference_id = std::move(reference_id);
  r.test_id = std::move(test_id);
  r.normalization = range.to_string();
  const Image a = to_bit_range(reference, range, r.bit_depth);
  const Image b = to_bit_range(test, range, r.bit_depth);
  r.mse = mse(a, b);
  const double peak = peak_value(r.bit_depth);
  r.psnr_db = r.mse == 0.0 ? kInf : 10.0 * std::log10(peak * peak / r.mse);
  r.ssim = ssim_raw(a, b);
  return r;
}

nlohmann::json to_json(const MetricReport& report) {
  return {
      {"reference_id", report.reference_id},
      {"test_id", report.test_id},
      {"mse", number_json(report.mse)},
      {"psnr_db", number_json(report.psnr_db)},
      {"ssim", number_json(report.ssim)},
      {"normalization", report.normalization},
      {"bit_depth", report.bit_depth},
  };
}

MetricReport metric_report_from_json(const nlohmann::json& j) {
  try {
    MetricReport r;
    r.reference_id = j.at("reference_id").get<std::string>();
    r.test_id = j.at("test_id").get<std::string>();
    r.mse = json_number(j.at("mse"));
    r.psnr_db = json_number(j.at("psnr_db"));
    r.ssim = json_number(j.at("ssim"));
    r.normalization = j.at("normalization").get<std::string>();
    r.bit_depth = j.at("bit_depth").get<int>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed metric report: ") + e.what());
  }
}

double correlation(const Image& x, const Image& y) {
  require_same_shape(x, y, "correlation");
  if (x.empty()) throw InvalidArgument("correlation of empty images");
  const Moments m = moments(x, y);
  if (m.var_x == 0.0 || m.var_y == 0.0) return 0.0;
  return m.cov / std::sqrt(m.var_x * m.var_y);
}

std::pair<double, double> mean_std(const std::vector<double>& values) {
  if (values.empty()) throw InvalidArgument("mean_std of no values");
  detail::NeumaierSum s;
  for (double v : values) s.add(v);
  const double mean = s.value() / static_cast<double>(values.size());
  if (values.size() == 1) return {mean, 0.0};
  detail::NeumaierSum d;
  for (double v : values) d.add((v - mean) * (v - mean));
  return {mean, std::sqrt(d.value() / static_cast<double>(values.size() - 1))};
}

}  // namespace fspi
