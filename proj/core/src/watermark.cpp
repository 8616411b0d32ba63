#include "fspi/watermark.hpp"

#include <algorithm>
#include <cmath>

#include "fspi/error.hpp"
#include "fspi/rng.hpp"
#include "kahan.hpp"

namespace fspi {

std::vector<std::size_t> PermutationKey::expand() const {
  if (size == 0) throw InvalidArgument("permutation key size must be positive");
  return seeded_permutation(seed, size);
}

namespace {

void check_key(const Image& img, const PermutationKey& key) {
  if (img.size() != key.size) {
    throw DimensionMismatch("permutation key of size " + std::to_string(key.size) + " applied to " +
                            std::to_string(img.size()) + " pixels");
  }
}

Image with_offset(const Image& watermark, double dc_offset) {
  validate_scene(watermark, "watermark");
  if (!std::isfinite(dc_offset) || dc_offset < 0.0) throw InvalidArgument("dc_offset must be finite and >= 0");
  return offset(watermark, dc_offset);
}

}  // namespace

Image scramble(const Image& img, const PermutationKey& key) {
  check_key(img, key);
  const auto perm = key.expand();
  Image out(img.width(), img.height());
  const auto in = img.values();
  auto px = out.values();
  for (std::size_t i = 0; i < perm.size(); ++i) px[i] = in[perm[i]];
  return out;
}

Image unscramble(const Image& img, const PermutationKey& key) {
  check_key(img, key);
  const auto perm = key.expand();
  Image out(img.width(), img.height());
  const auto in = img.values();
  auto px = out.values();
  for (std::size_t i = 0; i < perm.size(); ++i) px[perm[i]] = in[i];
  return out;
}

double k2(const Image& watermark, double dc_offset, const PatternParams& params) {
  return 2.0 * params.a * pixel_sum(with_offset(watermark, dc_offset));
}

TVSignal watermark_tv(const Image& watermark, const AcquisitionPlan& plan, double dc_offset) {
  const Image shifted = with_offset(watermark, dc_offset);
  const double raw_k2 = 2.0 * plan.params.a * pixel_sum(shifted);
  if (!(raw_k2 > 0.0)) throw InvalidArgument("watermark plus dc_offset is identically zero, so K2 = 0");
  MeasurementSequence raw = measure(shifted, plan);
  const double norm = *std::max_element(raw.values.begin(), raw.values.end());
  if (!(norm > 0.0)) throw InvalidArgument("watermark coefficients have no positive maximum");

  TVSignal tv;
  tv.weights = std::move(raw.values);
  for (double& w : tv.weights) w = std::max(0.0, w / norm);
  tv.k2 = raw_k2 / norm;
  tv.dc_offset = dc_offset;
  tv.normalization = norm;
  return tv;
}

double q_factor(const Image& scene, const Image& watermark, double dc_offset, const PatternParams& params) {
  const double kw = k2(watermark, dc_offset, params);
  if (!(kw > 0.0)) throw InvalidArgument("K2 is zero, Q is undefined");
  return k1(scene, params) / kw;
}

double dc_offset_for_q(const Image& scene, const Image& watermark, double q, const PatternParams& params) {
  if (!(q > 0.0) || !std::isfinite(q)) throw InvalidArgument("target Q must be positive");
  require_same_shape(scene, watermark, "dc_offset_for_q");
  const double target_sum = k1(scene, params) / (2.0 * params.a * q);
  const double wsum = pixel_sum(watermark);
  const double dc = (target_sum - wsum) / static_cast<double>(watermark.size());
  // Rounding at the dc = 0 end must not reject Q exactly equal to its maximum.
  if (dc < 0.0 && target_sum - wsum >= -1e-12 * wsum) return 0.0;
  if (dc < 0.0) {
    throw InvalidArgument("Q = " + std::to_string(q) + " exceeds the dc_offset = 0 value " +
                          std::to_string(q_factor(scene, watermark, 0.0, params)));
  }
  return dc;
}

Image fuse_predict(const Image& host_recon, const Image& watermark_recon, double k1_value, double k2_value) {
  require_same_shape(host_recon, watermark_recon, "fuse_predict");
  return linear_combination(k2_value / 2.0, host_recon, k1_value / 2.0, watermark_recon);
}

TVSignal confine_tv(const TVSignal& tv, const AcquisitionPlan& plan, const FrequencyRegion& keep) {
  if (plan.mode != PatternMode::FourStepSinusoid) throw ModeMismatch("confine_tv needs a four-step plan");
  if (keep.width != plan.width() || keep.height != plan.height()) {
    throw DimensionMismatch("region grid does not match the plan");
  }
  tv.validate(plan.size());
  TVSignal out = tv;
  const double flat = tv.k2 / 2.0;
  for (const auto& g : plan.groups()) {
    if (keep.contains(g.frequency)) continue;
    for (std::size_t k = 0; k < g.count; ++k) out.weights[g.first + k] = flat;
  }
  return out;
}

TVSignal shorten_tv(const TVSignal& tv, const AcquisitionPlan& plan, double fraction) {
  return confine_tv(tv, plan, low_frequency_region(plan.width(), plan.height(), fraction));
}

EmbedResult embed_with_tv(const Image& scene, const TVSignal& tv, const AcquisitionPlan& plan,
                          const NoiseModel& noise) {
  EmbedResult r;
  r.tv = tv;
  r.measurements = measure(scene, plan, tv, noise);
  r.fused = reconstruct_image(r.measurements, plan);
  r.k1 = k1(scene, plan.params);
  r.k2 = tv.k2 * tv.normalization;
  r.q = r.k1 / r.k2;
  return r;
}

EmbedResult embed(const Image& scene, const Image& watermark, const AcquisitionPlan& plan, double dc_offset,
                  const NoiseModel& noise) {
  require_same_shape(scene, watermark, "embed");
  return embed_with_tv(scene, watermark_tv(watermark, plan, dc_offset), plan, noise);
}

Image predicted_fusion(const Image& scene, const TVSignal& tv, const AcquisitionPlan& plan) {
  tv.validate(plan.size());
  MeasurementSequence weights_as_seq;
  weights_as_seq.values = tv.weights;
  const Image host = reconstruct_image(measure(scene, plan), plan);
  const Image wm = reconstruct_image(weights_as_seq, plan);
  return fuse_predict(host, wm, k1(scene, plan.params), tv.k2);
}

ColorImage embed_color(const ColorImage& scene, const ColorImage& watermark, const AcquisitionPlan& plan,
                       const std::array<double, 3>& dc_offsets, const NoiseModel& noise) {
  scene.validate();
  watermark.validate();
  if (scene.width() != watermark.width() || scene.height() != watermark.height()) {
    throw DimensionMismatch("color scene and watermark differ in size");
  }
  ColorImage out;
  for (std::size_t c = 0; c < 3; ++c) {
    out.channels[c] = embed(scene.channels[c], watermark.channels[c], plan, dc_offsets[c], noise).fused;
  }
  return out;
}

double watermark_contrast(const Image& fused, const Image& watermark) {
  require_same_shape(fused, watermark, "watermark_contrast");
  const Image norm = normalize_min_max(fused);
  const auto wm = watermark.values();
  const double peak = *std::max_element(wm.begin(), wm.end());
  detail::NeumaierSum in_sum;
  detail::NeumaierSum out_sum;
  std::size_t in_n = 0;
  for (std::size_t i = 0; i < wm.size(); ++i) {
    if (wm[i] > 0.5 * peak) {
      in_sum.add(norm.values()[i]);
      ++in_n;
    } else {
      out_sum.add(norm.values()[i]);
    }
  }
  const std::size_t out_n = wm.size() - in_n;
  if (in_n == 0 || out_n == 0) throw InvalidArgument("watermark support must be a proper, nonempty subset");
  return in_sum.value() / static_cast<double>(in_n) - out_sum.value() / static_cast<double>(out_n);
}

}  // namespace fspi
