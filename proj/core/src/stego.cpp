#include "fspi/stego.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "fspi/error.hpp"
#include "fspi/rng.hpp"
#include "pattern_kernel.hpp"

namespace fspi {

std::size_t FrequencyMask::r1_count() const {
  return static_cast<std::size_t>(std::count(r1.begin(), r1.end(), std::uint8_t{1}));
}

std::vector<Frequency> FrequencyMask::r2_frequencies() const {
  std::vector<Frequency> out;
  out.reserve(r2_count());
  for (std::size_t v = 0; v < height; ++v) {
    for (std::size_t u = 0; u < width; ++u) {
      if (!r1[v * width + u]) out.push_back({u, v});
    }
  }
  return out;
}

FrequencyMask build_mask(std::size_t width, std::size_t height, std::size_t r1_side, bool allow_empty_r1) {
  if (width == 0 || height == 0) throw InvalidArgument("mask grid must be at least 1x1");
  if (r1_side == 0 && !allow_empty_r1) {
    throw InvalidArgument("r1_side = 0 leaves the host unprotected; pass allow_empty_r1 to override");
  }
  if (r1_side > std::min(width, height)) {
    throw InvalidArgument("r1_side " + std::to_string(r1_side) + " exceeds the grid");
  }
  FrequencyMask mask{width, height, r1_side, std::vector<std::uint8_t>(width * height, 0)};
  const auto lo = -static_cast<std::int64_t>(r1_side / 2);
  const auto hi = static_cast<std::int64_t>(r1_side - r1_side / 2) - 1;
  auto inside = [&](std::size_t k, std::size_t n) {
    // A full-width block covers the ring regardless of how wrapped_index splits it.
    if (r1_side == n) return true;
    const auto s = wrapped_index(k, n);
    const auto alt = s < 0 ? s + static_cast<std::int64_t>(n) : s - static_cast<std::int64_t>(n);
    return (s >= lo && s <= hi) || (alt >= lo && alt <= hi);
  };
  for (std::size_t v = 0; v < height; ++v) {
    for (std::size_t u = 0; u < width; ++u) {
      if (inside(u, width) && inside(v, height)) mask.r1[v * width + u] = 1;
    }
  }
  return mask;
}

std::size_t capacity(const FrequencyMask& mask) { return mask.r2_count() / 4; }

std::vector<Frequency> default_watermark_freqs(std::size_t width, std::size_t height, std::size_t count) {
  auto order = frequencies_by_distance(width, height);
  if (count > order.size()) throw InvalidArgument("more watermark frequencies requested than the grid holds");
  order.resize(count);
  return order;
}

FrequencyMask FrequencyMapping::mask() const { return build_mask(width, height, r1_side, true); }

void FrequencyMapping::validate() const {
  if (width == 0 || height == 0 || watermark_width == 0 || watermark_height == 0) {
    throw InvalidArgument("mapping grids must be at least 1x1");
  }
  if (!(normalization > 0.0) || !std::isfinite(normalization)) {
    throw InvalidArgument("mapping normalization must be positive");
  }
  const FrequencyMask m = mask();
  std::vector<std::uint8_t> host_used(width * height, 0);
  std::map<std::pair<std::size_t, std::size_t>, unsigned> phases;
  for (const auto& e : entries) {
    if (e.host.u >= width || e.host.v >= height) throw InvalidArgument("mapping host frequency outside the grid");
    if (e.watermark.u >= watermark_width || e.watermark.v >= watermark_height) {
      throw InvalidArgument("mapping watermark frequency outside the watermark grid");
    }
    if (e.phase_code < 0 || e.phase_code > 3) throw InvalidArgument("mapping phase code must be 0..3");
    if (m.in_r1(e.host)) throw InvalidArgument("mapping uses a host group inside R1");
    auto& used = host_used[e.host.v * width + e.host.u];
    if (used) throw InvalidArgument("mapping uses a host group twice");
    used = 1;
    auto& mask_bits = phases[{e.watermark.v, e.watermark.u}];
    const unsigned bit = 1U << e.phase_code;
    if (mask_bits & bit) throw InvalidArgument("mapping uses a watermark slot twice");
    mask_bits |= bit;
  }
  for (const auto& [freq, bits] : phases) {
    if (bits != 0b1111U) throw InvalidArgument("mapping carries only some phases of a watermark frequency");
  }
}

FrequencyMapping build_mapping(const FrequencyMask& mask, const std::vector<Frequency>& watermark_freqs,
                               std::size_t watermark_width, std::size_t watermark_height,
                               std::optional<std::uint64_t> key_seed) {
  if (watermark_freqs.size() > capacity(mask)) {
    throw InvalidArgument(std::to_string(watermark_freqs.size()) + " watermark coefficients exceed the capacity " +
                          std::to_string(capacity(mask)));
  }
  const auto r2 = mask.r2_frequencies();
  std::vector<std::size_t> order(r2.size());
  if (key_seed) {
    order = seeded_permutation(*key_seed, r2.size());
  } else {
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  }
  FrequencyMapping mapping;
  mapping.width = mask.width;
  mapping.height = mask.height;
  mapping.watermark_width = watermark_width;
  mapping.watermark_height = watermark_height;
  mapping.r1_side = mask.r1_side;
  mapping.key_seed = key_seed;
  mapping.entries.reserve(4 * watermark_freqs.size());
  for (std::size_t j = 0; j < watermark_freqs.size(); ++j) {
    for (int k = 0; k < 4; ++k) {
      const std::size_t slot = 4 * j + static_cast<std::size_t>(k);
      mapping.entries.push_back({r2[order[slot]], watermark_freqs[j], k});
    }
  }
  mapping.validate();
  return mapping;
}

std::vector<double> stego_coefficients(const Image& watermark, const FrequencyMapping& mapping,
                                       const PatternParams& params, double* normalization) {
  validate_scene(watermark, "watermark");
  if (watermark.width() != mapping.watermark_width || watermark.height() != mapping.watermark_height) {
    throw DimensionMismatch("watermark size does not match the mapping's watermark grid");
  }
  if (mapping.entries.empty()) throw InvalidArgument("mapping carries no watermark coefficients");
  PatternParams wp = params;
  wp.width = watermark.width();
  wp.height = watermark.height();
  wp.validate();
  const detail::SinusoidKernel kernel(wp);
  std::vector<double> coeffs(mapping.entries.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    PatternSpec spec;
    spec.mode = PatternMode::FourStepSinusoid;
    spec.u = mapping.entries[i].watermark.u;
    spec.v = mapping.entries[i].watermark.v;
    spec.phase_code = mapping.entries[i].phase_code;
    coeffs[i] = kernel.inner_product(spec, watermark.values());
  }
  const double peak = *std::max_element(coeffs.begin(), coeffs.end());
  if (!(peak > 0.0)) throw InvalidArgument("watermark coefficients have no positive maximum");
  for (double& c : coeffs) c = std::max(0.0, c / peak);
  if (normalization) *normalization = peak;
  return coeffs;
}

namespace {

// Group index of each frequency in the plan, or -1.
std::vector<std::ptrdiff_t> group_lookup(const std::vector<PatternGroup>& groups, std::size_t w, std::size_t h) {
  std::vector<std::ptrdiff_t> at(w * h, -1);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    at[groups[g].frequency.v * w + groups[g].frequency.u] = static_cast<std::ptrdiff_t>(g);
  }
  return at;
}

void check_plan(const FrequencyMapping& mapping, const AcquisitionPlan& plan) {
  if (plan.mode != PatternMode::FourStepSinusoid) throw ModeMismatch("steganography needs a four-step plan");
  if (plan.width() != mapping.width || plan.height() != mapping.height) {
    throw DimensionMismatch("mapping host grid does not match the plan");
  }
}

}  // namespace

TVSignal stego_weights(const Image& watermark, const FrequencyMapping& mapping, const AcquisitionPlan& plan) {
  check_plan(mapping, plan);
  mapping.validate();
  double norm = 1.0;
  const auto coeffs = stego_coefficients(watermark, mapping, plan.params, &norm);
  const auto groups = plan.groups();
  const auto at = group_lookup(groups, plan.width(), plan.height());

  TVSignal tv;
  tv.weights.assign(plan.size(), 1.0);
  tv.k2 = 2.0;
  tv.normalization = norm;
  for (std::size_t i = 0; i < mapping.entries.size(); ++i) {
    const Frequency f = mapping.entries[i].host;
    const auto g = at[f.v * plan.width() + f.u];
    if (g < 0 || groups[static_cast<std::size_t>(g)].count != 4) {
      throw ModeMismatch("plan does not measure mapped host frequency (" + std::to_string(f.u) + "," +
                         std::to_string(f.v) + ") with four phases");
    }
    const auto& grp = groups[static_cast<std::size_t>(g)];
    for (std::size_t k = 0; k < grp.count; ++k) tv.weights[grp.first + k] = coeffs[i];
  }
  return tv;
}

double k1_from_sequence(const MeasurementSequence& seq, const AcquisitionPlan& plan, const FrequencyMask& mask) {
  if (plan.mode != PatternMode::FourStepSinusoid) throw ModeMismatch("K1 extraction needs a four-step plan");
  if (seq.size() != plan.size()) throw DimensionMismatch("measurement sequence does not match the plan");
  if (mask.width != plan.width() || mask.height != plan.height()) {
    throw DimensionMismatch("mask grid does not match the plan");
  }
  for (const auto& g : plan.groups()) {
    if (!mask.in_r1(g.frequency)) continue;
    double sum = 0.0;
    for (std::size_t k = 0; k < g.count; ++k) {
      const int code = plan.entries[g.first + k].phase_code;
      if (code == 0 || code == 2) sum += seq.values[g.first + k];
    }
    return sum;
  }
  throw InvalidArgument("the plan has no R1 group to measure K1 from");
}

std::vector<double> extract_weights(const MeasurementSequence& seq, const FrequencyMapping& mapping,
                                    const AcquisitionPlan& plan, std::optional<double> k1) {
  check_plan(mapping, plan);
  mapping.validate();
  if (seq.size() != plan.size()) throw DimensionMismatch("measurement sequence does not match the plan");
  const double k1_value = k1 ? *k1 : k1_from_sequence(seq, plan, mapping.mask());
  if (!(k1_value > 0.0) || !std::isfinite(k1_value)) throw InvalidArgument("K1 must be positive");
  const auto groups = plan.groups();
  const auto at = group_lookup(groups, plan.width(), plan.height());
  std::vector<double> out(mapping.entries.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Frequency f = mapping.entries[i].host;
    const auto g = at[f.v * plan.width() + f.u];
    if (g < 0 || groups[static_cast<std::size_t>(g)].count != 4) {
      throw ModeMismatch("plan does not measure a mapped host frequency with four phases");
    }
    const auto& grp = groups[static_cast<std::size_t>(g)];
    double sum = 0.0;
    for (std::size_t k = 0; k < grp.count; ++k) sum += seq.values[grp.first + k];
    out[i] = sum / (2.0 * k1_value);
  }
  return out;
}

SpectrumGrid extract_watermark(const MeasurementSequence& seq, const FrequencyMapping& mapping,
                               const AcquisitionPlan& plan, std::optional<double> k1) {
  const auto weights = extract_weights(seq, mapping, plan, k1);
  const std::size_t ww = mapping.watermark_width;
  const std::size_t wh = mapping.watermark_height;
  std::vector<std::array<double, 4>> by_phase(ww * wh);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto& e = mapping.entries[i];
    by_phase[e.watermark.v * ww + e.watermark.u][static_cast<std::size_t>(e.phase_code)] =
        weights[i] * mapping.normalization;
  }
  SpectrumGrid spec(ww, wh);
  for (const auto& e : mapping.entries) {
    if (e.phase_code != 0) continue;
    const auto& w = by_phase[e.watermark.v * ww + e.watermark.u];
    std::complex<double> c{w[0] - w[2], w[1] - w[3]};
    if (is_self_conjugate(e.watermark, ww, wh)) c.imag(0.0);
    spec.set(e.watermark, c);
  }
  return spec;
}

Image stego_host_reconstruct(const MeasurementSequence& seq, const AcquisitionPlan& plan, const FrequencyMask& mask,
                             HostRegions regions) {
  if (mask.width != plan.width() || mask.height != plan.height()) {
    throw DimensionMismatch("mask grid does not match the plan");
  }
  SpectrumGrid spec = assemble_spectrum(seq, plan);
  if (regions == HostRegions::R1Only) {
    for (std::size_t v = 0; v < spec.height; ++v) {
      for (std::size_t u = 0; u < spec.width; ++u) {
        if (!mask.in_r1({u, v})) spec.forget({u, v});
      }
    }
    return reconstruct(spec);
  }
  return reconstruct(complete_symmetry(std::move(spec)));
}

}  // namespace fspi
